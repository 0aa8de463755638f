#include "focklab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "focklab/shift_operator.hpp"

namespace focklab {

namespace {

constexpr double kBoundaryEps = 1e-12;

void check_positive_finite(double v, const char* name) {
    if (!(v > 0.0) || std::isinf(v) || std::isnan(v)) {
        throw std::invalid_argument(std::string("classify: ") + name + " must be positive and finite");
    }
}

double threshold_p_le_q(double p, double q) { return 2.0 - p * q / (p * q + q - p); }
double threshold_q_lt_p(double p, double q) { return 1.0 - 2.0 * (1.0 / q - 1.0 / p); }

} // namespace

Verdict classify(double m, double p, double q) {
    check_positive_finite(m, "m");
    check_positive_finite(p, "p");
    check_positive_finite(q, "q");

    Verdict v{m, p, q, 0.0, false, false, Clause::P_LE_Q};
    if (p <= q) {
        v.clause = Clause::P_LE_Q;
        v.threshold = threshold_p_le_q(p, q);
        const double d = m - v.threshold;
        if (std::abs(d) <= kBoundaryEps) {          // knife edge: bounded, not compact
            v.bounded = true;
            v.compact = false;
        } else {
            v.bounded = d < 0.0;
            v.compact = d < 0.0;
        }
    } else {
        v.clause = Clause::Q_LT_P;
        v.threshold = threshold_q_lt_p(p, q);
        const double d = m - v.threshold;
        const bool below = std::abs(d) <= kBoundaryEps ? false : d < 0.0; // strict at the boundary
        v.bounded = below;
        v.compact = below;
    }
    return v;
}

Verdict classify(const Rational& m, const Rational& p, const Rational& q) {
    using int128 = __int128;
    const int128 a = p.num, b = p.den, c = q.num, d = q.den;
    const int128 e = m.num, f = m.den;

    Verdict v{m.value(), p.value(), q.value(), 0.0, false, false, Clause::P_LE_Q};
    if (a * d <= c * b) { // p <= q
        v.clause = Clause::P_LE_Q;
        // threshold = (pq + 2(q-p)) / (pq + q - p) with pq = ac/(bd), q-p = (cb-ad)/(bd)
        const int128 t_num = a * c + 2 * (c * b - a * d);
        const int128 t_den = a * c + c * b - a * d; // positive when p <= q
        v.threshold = static_cast<double>(t_num) / static_cast<double>(t_den);
        const int128 lhs = e * t_den, rhs = f * t_num; // m vs threshold
        v.bounded = lhs <= rhs;
        v.compact = lhs < rhs;
    } else {
        v.clause = Clause::Q_LT_P;
        // threshold = (ac - 2(ad - cb)) / (ac)
        const int128 t_num = a * c - 2 * (a * d - c * b);
        const int128 t_den = a * c;
        v.threshold = static_cast<double>(t_num) / static_cast<double>(t_den);
        const bool below = e * t_den < f * t_num;
        v.bounded = below;
        v.compact = below;
    }
    return v;
}

double norm_estimate(double m, double p, double q) {
    check_positive_finite(m, "m");
    check_positive_finite(p, "p");
    check_positive_finite(q, "q");
    if (q < p) throw std::invalid_argument("norm_estimate: stated only for p <= q");

    if (std::abs(m - 1.0) <= kBoundaryEps) return 1.0;

    const double exponent = (m - 1.0) + (q - p) * (m - 2.0) / (q * p);
    if (exponent > kBoundaryEps) return std::numeric_limits<double>::infinity();
    // coefficient |m^{2+p} - m^{1+p}|^{1/p} = m^{(1+p)/p} |m-1|^{1/p}
    return std::pow(m, (1.0 + p) / p) * std::pow(std::abs(m - 1.0), 1.0 / p);
}

WeightCrosscheck empirical_crosscheck(double m, int n_trunc) {
    if (n_trunc < 1000) throw std::invalid_argument("empirical_crosscheck: truncation must be >= 1000");
    const ShiftSpectrum spec = shift_weights(m, n_trunc);
    const double sup = *std::max_element(spec.weights.begin(), spec.weights.end());
    return {sup, classify(m, 2.0, 2.0)};
}

} // namespace focklab
