#ifndef FOCKLAB_ENTIRE_SERIES_HPP
#define FOCKLAB_ENTIRE_SERIES_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace focklab {

/// An entire function represented by a finite Taylor coefficient vector
/// a_0..a_N at the origin.  The truncation degree N is part of the value:
/// evaluation always uses every stored coefficient, and trailing zeros are
/// kept (the zero series is {0}).
class EntireSeries {
public:
    using complex = std::complex<double>;

    /// Zero series of truncation degree 0.
    EntireSeries() : coeffs_{complex(0.0)} {}

    explicit EntireSeries(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("EntireSeries: empty coefficient vector");
    }

    static EntireSeries monomial(int n, complex a = complex(1.0)) {
        if (n < 0) throw std::invalid_argument("EntireSeries::monomial: negative degree");
        std::vector<complex> c(static_cast<std::size_t>(n) + 1, complex(0.0));
        c.back() = a;
        return EntireSeries(std::move(c));
    }

    /// Taylor polynomial of e^{lambda z} through degree `degree`.
    static EntireSeries exponential(complex lambda, int degree) {
        if (degree < 0) throw std::invalid_argument("EntireSeries::exponential: negative degree");
        std::vector<complex> c(static_cast<std::size_t>(degree) + 1);
        c[0] = 1.0;
        for (int k = 1; k <= degree; ++k) c[k] = c[k - 1] * lambda / static_cast<double>(k);
        return EntireSeries(std::move(c));
    }

    int truncation_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::span<const complex> coeffs() const { return coeffs_; }

    complex coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return complex(0.0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    complex operator()(complex z) const {
        complex acc(0.0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    /// log|f(z)| without overflow: for |z| > 1 evaluates z^N * g(1/z) with the
    /// reversed coefficients, so partial sums stay bounded by sum|a_k|.
    /// Returns -inf when f(z) = 0.
    double log_abs(complex z) const;

    /// Coefficient-shift derivative f'.
    EntireSeries derivative() const {
        if (coeffs_.size() == 1) return EntireSeries();
        std::vector<complex> c(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = static_cast<double>(k) * coeffs_[k];
        return EntireSeries(std::move(c));
    }

    EntireSeries scaled(complex c) const {
        std::vector<complex> out(coeffs_);
        for (auto& a : out) a *= c;
        return EntireSeries(std::move(out));
    }

    /// f(e^{i phi} z): coefficient k picks up the phase e^{i k phi}.
    EntireSeries rotated(double phi) const {
        std::vector<complex> out(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            out[k] = coeffs_[k] * std::polar(1.0, phi * static_cast<double>(k));
        return EntireSeries(std::move(out));
    }

    /// Cauchy product, truncation degree = sum of truncation degrees.
    EntireSeries times(const EntireSeries& other) const {
        std::vector<complex> out(coeffs_.size() + other.coeffs_.size() - 1, complex(0.0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
        return EntireSeries(std::move(out));
    }

    bool is_zero() const {
        for (const auto& a : coeffs_)
            if (a != complex(0.0)) return false;
        return true;
    }

    /// Index of the last nonzero coefficient (0 for the zero series).
    int effective_degree() const {
        for (int k = truncation_degree(); k > 0; --k)
            if (coeffs_[static_cast<std::size_t>(k)] != complex(0.0)) return k;
        return 0;
    }

    double coeff_abs_sum() const {
        double s = 0.0;
        for (const auto& a : coeffs_) s += std::abs(a);
        return s;
    }

    /// True when exactly one coefficient is nonzero (index reported via *index).
    bool is_monomial(int* index = nullptr, complex* value = nullptr) const;

private:
    std::vector<complex> coeffs_;
};

} // namespace focklab

#endif
