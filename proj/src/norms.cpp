#include "focklab/norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "focklab/errors.hpp"

namespace focklab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

} // namespace

double EntireSeries::log_abs(complex z) const {
    const double az = std::abs(z);
    if (az <= 1.0) {
        const double v = std::abs((*this)(z));
        return v == 0.0 ? kNegInf : std::log(v);
    }
    // f(z) = z^N g(1/z) with g the reversed polynomial; |1/z| < 1 keeps the
    // Horner partial sums bounded by sum |a_k|.
    const complex w = 1.0 / z;
    complex acc(0.0);
    for (const complex& a : coeffs_) acc = acc * w + a;
    const double v = std::abs(acc);
    if (v == 0.0) return kNegInf;
    return static_cast<double>(truncation_degree()) * std::log(az) + std::log(v);
}

bool EntireSeries::is_monomial(int* index, complex* value) const {
    int found = -1;
    for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k) {
        if (coeffs_[static_cast<std::size_t>(k)] != complex(0.0)) {
            if (found >= 0) return false;
            found = k;
        }
    }
    if (found < 0) return false;
    if (index) *index = found;
    if (value) *value = coeffs_[static_cast<std::size_t>(found)];
    return true;
}

LogMagnitude monomial_norm(const WeightParams& params, int n) {
    params.require_finite_p();
    if (n < 0) throw std::invalid_argument("monomial_norm: negative degree");
    const double m = params.m, p = params.p;
    const double a = (p * n + 2.0) / m;
    const double log_pth_power = std::log(2.0 * kPi / m) - a * std::log(p) + std::lgamma(a);
    return LogMagnitude::from_log(log_pth_power / p);
}

namespace {

struct RadialEngine {
    const EntireSeries& f;
    double m, p, beta;   // beta: exponent of (1+r)
    double rel_tol;

    int degree;          // effective degree of f
    double log_coeff_sum;
    bool monomial;
    int mono_index = 0;
    double mono_log_abs = 0.0;

    double c;            // integration variable substitution t = u^c
    double a_hi;         // dominant Gamma exponent of the tail bound

    explicit RadialEngine(const EntireSeries& f_, double m_, double p_, double beta_, double rel_tol_)
        : f(f_), m(m_), p(p_), beta(beta_), rel_tol(rel_tol_) {
        degree = f.effective_degree();
        log_coeff_sum = std::log(f.coeff_abs_sum());
        EntireSeries::complex mono_value;
        monomial = f.is_monomial(&mono_index, &mono_value);
        if (monomial) mono_log_abs = std::log(std::abs(mono_value));
        c = std::max(1.0, m / 2.0);
        a_hi = (p * degree + std::max(beta, 0.0) + 2.0) / m;
    }

    // log A(r), A(r) = int_0^{2pi} |f(r e^{i theta})|^p dtheta.
    double log_angular(double r, int nodes) const {
        if (monomial) {
            const double lr = r == 0.0 ? kNegInf : std::log(r);
            if (mono_index == 0) return std::log(2.0 * kPi) + p * mono_log_abs;
            if (r == 0.0) return kNegInf;
            return std::log(2.0 * kPi) + p * (mono_log_abs + mono_index * lr);
        }
        double acc = kNegInf;
        const double step = 2.0 * kPi / nodes;
        for (int j = 0; j < nodes; ++j) {
            const double la = f.log_abs(std::polar(r, step * j));
            if (la != kNegInf) acc = log_add_exp(acc, p * la);
        }
        return acc == kNegInf ? kNegInf : acc + std::log(step);
    }

    // log of the transformed integrand g(u), t = u^c, r = (t/p)^{1/m}:
    //   g(u) = c u^{c-1} (1/(mp)) (t/p)^{2/m-1} e^{-t} (1+r)^beta A(r).
    double log_integrand(double u, int angular_nodes) const {
        const double t = std::pow(u, c);
        const double log_t = c * std::log(u);
        const double r = std::pow(t / p, 1.0 / m);
        const double la = log_angular(r, angular_nodes);
        if (la == kNegInf) return kNegInf;
        return std::log(c) + (c - 1.0) * std::log(u) - std::log(m * p) +
               (2.0 / m - 1.0) * (log_t - std::log(p)) - t + beta * std::log1p(r) + la;
    }

    // Rigorous bound on log int_{t >= T} of the integrand, using
    // |f| <= C max(1,r)^degree and (1+r)^beta <= 2^{beta_+} max(1,r)^{beta_+};
    // valid for T >= 2 a_hi + 4 and r(T) >= 1.
    double log_tail_bound(double T) const {
        const double bp = std::max(beta, 0.0);
        return std::log(2.0 * kPi / (m * p)) + p * log_coeff_sum + bp * std::log(2.0) +
               (a_hi - 1.0) * (std::log(T) - std::log(p)) - T + std::log(2.0);
    }

    double min_tail_T() const {
        // also force r(T) >= 1, i.e. T >= p
        return std::max(2.0 * a_hi + 4.0, p + 4.0);
    }

    double estimate(double U, double width, int angular_nodes) const {
        const int panels = std::max(1, static_cast<int>(std::ceil(U / width)));
        const double h = U / panels;
        double acc = kNegInf;
        for (int i = 0; i < panels; ++i) {
            const double mid = (i + 0.5) * h, half = 0.5 * h;
            for (std::size_t j = 0; j < kGlNodes.size(); ++j) {
                for (int s : {-1, 1}) {
                    const double u = mid + s * half * kGlNodes[j];
                    const double lg = log_integrand(u, angular_nodes);
                    if (lg != kNegInf) acc = log_add_exp(acc, lg + std::log(kGlWeights[j] * half));
                }
            }
        }
        return acc;
    }
};

} // namespace

namespace detail {

double log_weighted_power_integral(const EntireSeries& f, double m, double p,
                                   double extra_exponent, double rel_tol) {
    if (!(rel_tol > 0.0) || rel_tol >= 1.0) throw std::invalid_argument("quadrature: rel_tol must lie in (0,1)");
    if (f.is_zero()) return kNegInf;

    RadialEngine eng(f, m, p, extra_exponent, rel_tol);
    const double tol_log = p * rel_tol; // tolerance on the log of the p-th power integral

    double T = std::max(eng.min_tail_T(), eng.a_hi + 40.0 * std::sqrt(eng.a_hi) + 60.0);
    double U = std::pow(T, 1.0 / eng.c);
    double width = U / 32.0;

    const bool even_p = std::abs(p - std::round(p)) == 0.0 && std::fmod(std::round(p), 2.0) == 0.0;
    int angular = 16;
    if (!eng.monomial) {
        angular = even_p ? std::max(16, static_cast<int>(std::round(p / 2.0)) * eng.degree + 2)
                         : std::max(32, 4 * (eng.degree + 1));
    }

    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int round = 0; round < 12; ++round) {
        double estimate = eng.estimate(U, width, angular);
        // Extend the domain until the analytic tail is negligible next to the
        // running estimate (a lower bound, since the integrand is >= 0).
        int guard = 0;
        while (eng.log_tail_bound(std::pow(U, eng.c)) > estimate + std::log(0.25 * tol_log)) {
            U *= 1.2;
            estimate = eng.estimate(U, width, angular);
            if (++guard > 200) throw quadrature_error("radial quadrature: tail bound failed to close");
        }
        if (!std::isnan(prev) && std::abs(estimate - prev) <= 0.45 * tol_log) return estimate;
        prev = estimate;
        width *= 0.5;
        if (!eng.monomial && !even_p) angular *= 2;
    }
    throw quadrature_error("radial quadrature: rel_tol not met within panel budget");
}

} // namespace detail

LogMagnitude series_norm(const WeightParams& params, const EntireSeries& f, double rel_tol) {
    params.require_finite_p();
    if (f.is_zero()) return LogMagnitude::zero();
    const double log_power = detail::log_weighted_power_integral(f, params.m, params.p, 0.0, rel_tol);
    return LogMagnitude::from_log(log_power / params.p);
}

namespace {

// max_theta log|f(r e^{i theta})| by dense sampling plus golden-section
// refinement around the best node.
double log_angular_max(const EntireSeries& f, double r, int samples) {
    const double step = 2.0 * kPi / samples;
    int best = 0;
    double best_val = kNegInf;
    for (int j = 0; j < samples; ++j) {
        const double v = f.log_abs(std::polar(r, step * j));
        if (v > best_val) { best_val = v; best = j; }
    }
    if (best_val == kNegInf) return kNegInf;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = step * (best - 1), hi = step * (best + 1);
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = f.log_abs(std::polar(r, x1)), f2 = f.log_abs(std::polar(r, x2));
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + phi * (hi - lo); f2 = f.log_abs(std::polar(r, x2));
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - phi * (hi - lo); f1 = f.log_abs(std::polar(r, x1));
        }
    }
    return std::max({best_val, f1, f2});
}

} // namespace

double growth_norm(double m, const EntireSeries& f) {
    if (!(m > 0.0) || std::isinf(m)) throw std::invalid_argument("growth_norm: m must be positive and finite");
    if (f.is_zero()) return 0.0;

    const int deg = f.effective_degree();
    const int angular_samples = std::max(64, 8 * (deg + 1));
    const auto objective = [&](double r) { return log_angular_max(f, r, angular_samples) - std::pow(r, m); };

    if (deg == 0) return std::abs(f.coeff(0)); // weight maximal at the origin

    // Beyond r_cut = (deg/m)^{1/m} the objective is decreasing: the log-log
    // slope of max|f| never exceeds deg.
    const double r_cut = std::pow(deg / m, 1.0 / m);
    const int grid = 160;
    std::vector<double> rs;
    rs.push_back(0.0);
    const double r_lo = r_cut * 1e-3, r_hi = r_cut * 1.05;
    for (int i = 0; i <= grid; ++i)
        rs.push_back(r_lo * std::pow(r_hi / r_lo, static_cast<double>(i) / grid));

    int best = 0;
    double best_val = kNegInf;
    std::vector<double> vals(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        vals[i] = rs[i] == 0.0 ? (f.coeff(0) == EntireSeries::complex(0.0) ? kNegInf : std::log(std::abs(f.coeff(0))))
                               : objective(rs[i]);
        if (vals[i] > best_val) { best_val = vals[i]; best = static_cast<int>(i); }
    }

    double lo = rs[static_cast<std::size_t>(std::max(0, best - 1))];
    double hi = rs[static_cast<std::size_t>(std::min<int>(static_cast<int>(rs.size()) - 1, best + 1))];
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = objective(x1), f2 = objective(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + phi * (hi - lo); f2 = objective(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - phi * (hi - lo); f1 = objective(x1);
        }
    }
    return std::exp(std::max({best_val, f1, f2}));
}

double lp_ratio(const WeightParams& params, const EntireSeries& f, double rel_tol) {
    params.require_finite_p();
    if (f.is_zero()) throw std::invalid_argument("lp_ratio: f must be nonzero");
    const double m = params.m, p = params.p;

    const double log_norm_power = detail::log_weighted_power_integral(f, m, p, 0.0, rel_tol);

    double log_numerator = kNegInf;
    const double f0 = std::abs(f.coeff(0));
    if (f0 > 0.0) log_numerator = p * std::log(f0);
    const EntireSeries fp = f.derivative();
    if (!fp.is_zero()) {
        const double log_paley = detail::log_weighted_power_integral(fp, m, p, -p * (m - 1.0), rel_tol);
        log_numerator = log_add_exp(log_numerator, log_paley);
    }
    return std::exp(log_numerator - log_norm_power);
}

} // namespace focklab
