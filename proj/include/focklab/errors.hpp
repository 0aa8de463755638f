#ifndef FOCKLAB_ERRORS_HPP
#define FOCKLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace focklab {

/// Thrown when an adaptive quadrature or series summation cannot certify the
/// requested relative tolerance within its panel / term budget.
class quadrature_error : public std::runtime_error {
public:
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a covering construction fails a sampled lattice property
/// (carries the offending sample point in the message).
class covering_error : public std::runtime_error {
public:
    explicit covering_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace focklab

#endif
