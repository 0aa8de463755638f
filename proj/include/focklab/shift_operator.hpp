#ifndef FOCKLAB_SHIFT_OPERATOR_HPP
#define FOCKLAB_SHIFT_OPERATOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "focklab/log_scalar.hpp"

namespace focklab {

/// Differentiation on F_(m,2) in the normalized monomial basis
/// e_n = z^n / ||z^n||: D e_n = w_n e_{n-1} with
/// w_n = n ||z^{n-1}||_(m,2) / ||z^n||_(m,2), a weighted backward shift.
/// weights[n-1] stores w_n for n = 1..dim.
struct ShiftSpectrum {
    double m;
    int dim;
    std::vector<double> weights;
};

/// Weights from log-Gamma differences of the closed-form monomial norms:
///   log w_n = log n + (log 2)/m + (lgamma(2n/m) - lgamma((2n+2)/m)) / 2.
/// Raw norm division loses the 1e-10 relative accuracy target near n = 1e5,
/// so the cancellation happens inside lgamma.
ShiftSpectrum shift_weights(double m, int n_trunc);

/// Finite section of D on span{e_0..e_N}: entry (n-1, n) = w_n, all else 0.
Eigen::MatrixXd truncated_matrix(const ShiftSpectrum& spec);

/// Singular values of the truncated matrix, sorted descending.  D*D is
/// diagonal with entries w_n^2, so these are exactly the sorted weights; for
/// small sections the result is cross-checked against a general-purpose SVD.
std::vector<double> singular_values(const ShiftSpectrum& spec);

/// Same multiset via a dense general-purpose SVD of the truncated matrix.
/// The independent route used by the verification suites.
std::vector<double> singular_values_dense(const ShiftSpectrum& spec);

struct SchattenProbe {
    double p;
    LogMagnitude partial_sum;      // sum_{n<=N} w_n^p, log-safe accumulation
    double fitted_exponent;        // LS slope of log w_n vs log n over n in [N/100, N]
    double diagonal_sum;           // sum_n |<D e_n, e_n>|^p (identically 0 for the shift)
    double divergence_threshold_p; // m/(1-m) for m < 1, else +inf marker for "all p"
    bool partial_sum_diverging;    // empirical: fitted_exponent * p >= -1
};

/// Schatten-class probe of Theorem 2(i): the diagonal-sum criterion gives
/// exactly zero for every p, while the explicit singular values w_n ~ n^{1-1/m}
/// make sum w_n^p diverge for p <= m/(1-m) when m < 1 (and for every p when
/// m >= 1).  Both quantities are reported side by side; the probe does not
/// adjudicate between them.
SchattenProbe schatten_partial(const ShiftSpectrum& spec, double p);

/// Reproducing-kernel norm series at w:
///   ||K_(m,w)||^2        = sum_n |w|^{2n} / ||z^n||^2_(m,2)
///   ||dbar K_(m,w)||^2   = sum_n n^2 |w|^{2(n-1)} / ||z^n||^2_(m,2)
/// summed in log space until the geometric tail certificate (term ratio below
/// 1/2) is under rel_tol.
struct KernelSum {
    std::complex<double> w;
    LogMagnitude log_norm_sq;
    LogMagnitude log_dbar_norm_sq;
    double tail_bound;   // certified relative tail bound
    int terms_used;
};

KernelSum kernel_norms(double m, std::complex<double> w, double rel_tol);

} // namespace focklab

#endif
