#ifndef FOCKLAB_SPECTRUM_HPP
#define FOCKLAB_SPECTRUM_HPP

#include <complex>
#include <cstdint>

#include "focklab/entire_series.hpp"

namespace focklab {

enum class SpectrumKind { POINT_ZERO, CLOSED_UNIT_DISK, UNBOUNDED_OPERATOR };

/// Spectrum of D on F_(m,p): {0} for m < 1, the closed unit disk for m = 1
/// (the closure of {lambda : e^{lambda z} in F_(m,p)}), and no bounded
/// spectral theory at all for m > 1.
struct SpectrumDescriptor {
    SpectrumKind kind;
    double m, p;
};

/// Membership verdict for e^{lambda z} in F_(m,p), i.e. convergence of
/// int e^{p Re(lambda z) - p|z|^m} dA.  Decided analytically (m > 1: always;
/// m = 1: |lambda| < 1; m < 1: lambda = 0) and cross-checked by quadrature of
/// the radial maximum direction.  In the band | |lambda| - 1 | < 0.05 at
/// m = 1 the numeric check is declined: quadrature cannot certify a barely
/// divergent integral, so only the analytic verdict is reported.
struct ExpMembership {
    bool member;
    bool boundary;        // numeric verdict declined near |lambda| = 1 at m = 1
    bool numeric_checked;
    bool numeric_agrees;
};

ExpMembership exp_membership(double m, double p, std::complex<double> lambda);

/// Requires 1 <= p < inf (the hypothesis of the spectrum statement).
SpectrumDescriptor spectrum_of_D(double m, double p);

/// Unique analytic solution of lambda f - f' = h with f(0) = f0, via the
/// coefficient recurrence a_0 = f0, a_{k+1} = (lambda a_k - b_k)/(k+1).
/// Output truncation = input truncation + 1.  Applying (lambda id - d/dz) to
/// the output reproduces h on coefficients 0..deg(h); the top output
/// coefficient is the expected truncation remainder.
EntireSeries resolvent_apply(std::complex<double> lambda, const EntireSeries& h, std::complex<double> f0);

/// lambda f - f' as a series (same truncation as f).
EntireSeries shifted_derivative(std::complex<double> lambda, const EntireSeries& h);

/// The value f(0) for which the solution of lambda f - f' = h stays
/// polynomial (equivalently: lies in F_(m,p) when |lambda| > 1, m = 1, where
/// e^{lambda z} is outside the space).  Computed by the top-down recurrence
/// c_d = b_d / lambda, c_k = (b_k + (k+1) c_{k+1}) / lambda.
std::complex<double> in_space_resolvent_f0(std::complex<double> lambda, const EntireSeries& h);

struct RatioStats {
    double max_ratio;
    double mean_ratio;
    int count;
};

/// ||R_lambda h||_(m,p) / ||h||_(m,p) over a seeded ensemble of random
/// polynomials (iid standard complex Gaussian coefficients, degree
/// <= degree_cap).  The resolvent image is the in-space solution branch: the
/// e^{lambda z} component is excluded, since at |lambda| > 1, m = 1 it lies
/// outside the space.  Norms by quadrature at rel_tol.
RatioStats resolvent_norm_ratio(double m, double p, std::complex<double> lambda,
                                std::uint64_t seed, int count, int degree_cap = 30,
                                double rel_tol = 1e-8);

/// Ratio of int |f e^{lambda z}|^p e^{-p|z|} dA to the same integral with f'
/// in place of f (derivative of f alone).  +inf for constant f.  Requires
/// |lambda| < 1 so both integrals converge for polynomial f.  The integrals
/// are evaluated directly with the e^{p Re(lambda z)} factor in the
/// integrand; no truncation of e^{lambda z} is involved.
double lemma2_ratio(double p, std::complex<double> lambda, const EntireSeries& f,
                    double rel_tol = 1e-8);

} // namespace focklab

#endif
