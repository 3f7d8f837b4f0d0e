#ifndef CFZ_ERROR_HPP
#define CFZ_ERROR_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfz {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bad input / violated precondition.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Pivot collapsed below the row-scale threshold during elimination.
class SingularMatrixError : public Error {
  public:
    using Error::Error;
};

// A solve finished but the residual exceeds the contract bound.
class IllConditionedError : public Error {
  public:
    using Error::Error;
};

// Iteration cap reached; carries the best iterate found so far.
class NonConvergenceError : public Error {
  public:
    NonConvergenceError(const std::string& what,
                        std::vector<std::complex<double>> best_iterate)
        : Error(what), best(std::move(best_iterate)) {}
    std::vector<std::complex<double>> best;
};

// Quadrature hit the refinement cap; carries the last two estimates.
class QuadratureCapError : public Error {
  public:
    QuadratureCapError(const std::string& what, double last, double previous)
        : Error(what), last_estimate(last), previous_estimate(previous) {}
    double last_estimate;
    double previous_estimate;
};

// Requested case is outside the supported parameter range.
class UnsupportedCaseError : public Error {
  public:
    using Error::Error;
};

} // namespace cfz

#endif
