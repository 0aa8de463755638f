#ifndef FOCKLAB_LOG_SCALAR_HPP
#define FOCKLAB_LOG_SCALAR_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace focklab {

/// log(e^a + e^b) without overflow; handles -inf operands.
inline double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

/// A nonnegative magnitude kept in log space.  Quantities like e^{2|w|^m} or
/// Gamma((pn+2)/m) overflow double precision long before the regimes of
/// interest, so norms and kernel sums are carried as {log_value, is_zero}.
struct LogMagnitude {
    double log_value = -std::numeric_limits<double>::infinity();
    bool is_zero = true;

    static LogMagnitude zero() { return {}; }

    static LogMagnitude from_log(double lv) { return {lv, false}; }

    static LogMagnitude from_value(double v) {
        if (v < 0.0 || std::isnan(v)) throw std::invalid_argument("LogMagnitude: negative or NaN value");
        if (v == 0.0) return zero();
        return {std::log(v), false};
    }

    /// exp(log_value); may round to 0 or overflow to +inf.
    double value() const { return is_zero ? 0.0 : std::exp(log_value); }

    LogMagnitude pow(double e) const {
        if (is_zero) return zero();
        return from_log(log_value * e);
    }

    friend LogMagnitude operator*(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.is_zero || b.is_zero) return zero();
        return from_log(a.log_value + b.log_value);
    }

    friend LogMagnitude operator/(const LogMagnitude& a, const LogMagnitude& b) {
        if (b.is_zero) throw std::invalid_argument("LogMagnitude: division by zero magnitude");
        if (a.is_zero) return zero();
        return from_log(a.log_value - b.log_value);
    }

    static LogMagnitude add(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.is_zero) return b;
        if (b.is_zero) return a;
        return from_log(log_add_exp(a.log_value, b.log_value));
    }
};

/// Streaming log-space accumulator for sums of nonnegative terms.
class LogSum {
public:
    void add_log(double log_term) { total_ = log_add_exp(total_, log_term); }
    bool empty() const { return total_ == -std::numeric_limits<double>::infinity(); }
    double log_total() const { return total_; }
    LogMagnitude magnitude() const {
        return empty() ? LogMagnitude::zero() : LogMagnitude::from_log(total_);
    }

private:
    double total_ = -std::numeric_limits<double>::infinity();
};

} // namespace focklab

#endif
