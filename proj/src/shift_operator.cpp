#include "focklab/shift_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

#include "focklab/errors.hpp"

namespace focklab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log ||z^n||^2_(m,2) = log(2 pi / m) - ((2n+2)/m) log 2 + lgamma((2n+2)/m)
double log_monomial_norm_sq(double m, double n) {
    const double a = (2.0 * n + 2.0) / m;
    return std::log(2.0 * std::numbers::pi / m) - a * std::log(2.0) + std::lgamma(a);
}

} // namespace

ShiftSpectrum shift_weights(double m, int n_trunc) {
    if (!(m > 0.0) || std::isinf(m)) throw std::invalid_argument("shift_weights: m must be positive and finite");
    if (n_trunc < 1) throw std::invalid_argument("shift_weights: truncation must be >= 1");
    ShiftSpectrum spec{m, n_trunc, {}};
    spec.weights.resize(static_cast<std::size_t>(n_trunc));
    for (int n = 1; n <= n_trunc; ++n) {
        const double log_w = std::log(static_cast<double>(n)) + std::log(2.0) / m +
                             0.5 * (std::lgamma(2.0 * n / m) - std::lgamma((2.0 * n + 2.0) / m));
        spec.weights[static_cast<std::size_t>(n - 1)] = std::exp(log_w);
    }
    return spec;
}

Eigen::MatrixXd truncated_matrix(const ShiftSpectrum& spec) {
    const int size = spec.dim + 1;
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(size, size);
    for (int n = 1; n <= spec.dim; ++n) mat(n - 1, n) = spec.weights[static_cast<std::size_t>(n - 1)];
    return mat;
}

std::vector<double> singular_values_dense(const ShiftSpectrum& spec) {
    const Eigen::MatrixXd mat = truncated_matrix(spec);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(mat);
    const auto& sv = svd.singularValues();
    std::vector<double> out(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) out[static_cast<std::size_t>(i)] = sv(i);
    return out;
}

std::vector<double> singular_values(const ShiftSpectrum& spec) {
    std::vector<double> sorted = spec.weights;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    sorted.push_back(0.0); // the (N+1)x(N+1) section has a zero column
    if (spec.dim <= 64) {
        const std::vector<double> dense = singular_values_dense(spec);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const double scale = std::max(1.0, sorted.front());
            if (std::abs(dense[i] - sorted[i]) > 1e-8 * scale)
                throw std::runtime_error("singular_values: general SVD disagrees with sorted shift weights");
        }
    }
    return sorted;
}

SchattenProbe schatten_partial(const ShiftSpectrum& spec, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("schatten_partial: p must be positive");
    if (spec.dim < 100) throw std::invalid_argument("schatten_partial: need truncation >= 100 for the decay fit");

    SchattenProbe probe{};
    probe.p = p;

    LogSum sum;
    for (const double w : spec.weights) sum.add_log(p * std::log(w));
    probe.partial_sum = sum.magnitude();

    // <D e_n, e_n> = w_n <e_{n-1}, e_n> = 0: the section's diagonal vanishes
    // identically, so the basis-diagonal sum is exactly zero for every p.
    probe.diagonal_sum = 0.0;

    // least-squares slope of log w_n vs log n over the asymptotic window
    const int lo = std::max(1, spec.dim / 100);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int n = lo; n <= spec.dim; ++n) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(spec.weights[static_cast<std::size_t>(n - 1)]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++count;
    }
    probe.fitted_exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);

    probe.divergence_threshold_p = spec.m < 1.0 ? spec.m / (1.0 - spec.m)
                                                : std::numeric_limits<double>::infinity();
    probe.partial_sum_diverging = probe.fitted_exponent * p >= -1.0;
    return probe;
}

KernelSum kernel_norms(double m, std::complex<double> w, double rel_tol) {
    if (!(m > 0.0) || std::isinf(m)) throw std::invalid_argument("kernel_norms: m must be positive and finite");
    if (!(rel_tol > 0.0) || rel_tol >= 1.0) throw std::invalid_argument("kernel_norms: rel_tol must lie in (0,1)");

    const double aw = std::abs(w);
    KernelSum out{w, LogMagnitude::zero(), LogMagnitude::zero(), 0.0, 0};

    if (aw == 0.0) {
        // only n = 0 (kernel) and n = 1 (dbar derivative) survive
        out.log_norm_sq = LogMagnitude::from_log(-log_monomial_norm_sq(m, 0.0));
        out.log_dbar_norm_sq = LogMagnitude::from_log(-log_monomial_norm_sq(m, 1.0));
        out.terms_used = 2;
        return out;
    }

    const double log_aw = std::log(aw);
    const auto log_term_k = [&](int n) { return 2.0 * n * log_aw - log_monomial_norm_sq(m, n); };
    const auto log_term_d = [&](int n) {
        return 2.0 * std::log(static_cast<double>(n)) + 2.0 * (n - 1.0) * log_aw - log_monomial_norm_sq(m, n);
    };

    LogSum sum_k, sum_d;
    sum_k.add_log(log_term_k(0));
    constexpr int kMaxTerms = 1'000'000;
    const double log_half = std::log(0.5);
    double tail_k = 1.0, tail_d = 1.0;
    bool done_k = false, done_d = false;
    int n = 1;
    for (; n <= kMaxTerms && !(done_k && done_d); ++n) {
        if (!done_k) {
            const double lt = log_term_k(n), lt_next = log_term_k(n + 1);
            sum_k.add_log(lt);
            const double log_ratio = lt_next - lt;
            if (log_ratio < log_half) {
                // geometric domination: tail <= term_{n+1} / (1 - ratio)
                const double log_tail = lt_next - std::log1p(-std::exp(log_ratio));
                if (log_tail < sum_k.log_total() + std::log(rel_tol)) {
                    tail_k = std::exp(log_tail - sum_k.log_total());
                    done_k = true;
                }
            }
        }
        if (!done_d) {
            const double lt = log_term_d(n), lt_next = log_term_d(n + 1);
            sum_d.add_log(lt);
            const double log_ratio = lt_next - lt;
            if (log_ratio < log_half) {
                const double log_tail = lt_next - std::log1p(-std::exp(log_ratio));
                if (log_tail < sum_d.log_total() + std::log(rel_tol)) {
                    tail_d = std::exp(log_tail - sum_d.log_total());
                    done_d = true;
                }
            }
        }
    }
    if (!(done_k && done_d)) throw quadrature_error("kernel_norms: tail not certified within term budget");

    out.log_norm_sq = sum_k.magnitude();
    out.log_dbar_norm_sq = sum_d.magnitude();
    out.tail_bound = std::max(tail_k, tail_d);
    out.terms_used = n;
    return out;
}

} // namespace focklab
