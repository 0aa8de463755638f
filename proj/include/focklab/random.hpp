#ifndef FOCKLAB_RANDOM_HPP
#define FOCKLAB_RANDOM_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "focklab/entire_series.hpp"

namespace focklab {

/// Seeded generator with platform-independent variate recipes.  The standard
/// distribution classes are implementation-defined, so the variates here are
/// derived directly from mt19937_64 output: identical seeds produce identical
/// ensembles everywhere, which the report determinism contract relies on.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard complex Gaussian (E|z|^2 = 1): |z|^2 ~ Exp(1), uniform phase.
    std::complex<double> complex_gaussian() {
        const double u = uniform();
        const double radius = std::sqrt(-std::log1p(-u));
        return std::polar(radius, 2.0 * std::numbers::pi * uniform());
    }

    /// Area-uniform point of the disk |z| <= radius.
    std::complex<double> uniform_disk(double radius) {
        return std::polar(radius * std::sqrt(uniform()), 2.0 * std::numbers::pi * uniform());
    }

    std::uint64_t integer(std::uint64_t n) { return eng_() % n; }

private:
    std::mt19937_64 eng_;
};

/// Polynomial with iid standard complex Gaussian coefficients a_0..a_max_degree.
inline EntireSeries random_polynomial(SeededRng& rng, int max_degree) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& a : c) a = rng.complex_gaussian();
    return EntireSeries(std::move(c));
}

} // namespace focklab

#endif
