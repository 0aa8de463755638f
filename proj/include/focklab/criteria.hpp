#ifndef FOCKLAB_CRITERIA_HPP
#define FOCKLAB_CRITERIA_HPP

#include <cstdint>
#include <stdexcept>

namespace focklab {

/// Governing clause of the boundedness criterion for D: F_(m,p) -> F_(m,q).
enum class Clause { P_LE_Q, Q_LT_P };

/// Classification record for a triple (m, p, q).
struct Verdict {
    double m, p, q;
    double threshold;
    bool bounded;
    bool compact;
    Clause clause;
};

/// Positive rational with exact comparisons, for knife-edge threshold inputs.
struct Rational {
    long long num, den;

    Rational(long long n, long long d) : num(n), den(d) {
        if (d <= 0 || n <= 0) throw std::invalid_argument("Rational: requires positive numerator and denominator");
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Boundedness/compactness of D: F_(m,p) -> F_(m,q).
///
/// p <= q: threshold = 2 - pq/(pq+q-p); bounded iff m <= threshold,
///         compact iff m < threshold (boundary is bounded but not compact).
/// q <  p: threshold = 1 - 2(1/q - 1/p); bounded iff compact iff m < threshold
///         (strict: the boundary is unbounded).
///
/// Double inputs within 1e-12 of the threshold are treated as exactly at the
/// boundary; the Rational overload compares exactly.
Verdict classify(double m, double p, double q);
Verdict classify(const Rational& m, const Rational& p, const Rational& q);

/// One-sided operator-norm estimate for the clause p <= q:
///   1 when m = 1, otherwise
///   |m^{2+p} - m^{1+p}|^{1/p} * sup_w (1+|w|)^{(m-1) + (q-p)(m-2)/(qp)}.
/// The sup is attained at w = 0 when the exponent is <= 0 (the coefficient
/// itself), and is +inf when the exponent is positive.  Finiteness coincides
/// with classify(...).bounded.
double norm_estimate(double m, double p, double q);

/// Juxtaposes the classifier verdict at p = q = 2 with the measured growth of
/// the shift weights: sup_{n<=N} w_n stays below 1 exactly in the bounded
/// regime m <= 1.
struct WeightCrosscheck {
    double sup_weight;
    Verdict verdict;
};

WeightCrosscheck empirical_crosscheck(double m, int n_trunc);

} // namespace focklab

#endif
