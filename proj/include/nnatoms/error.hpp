#ifndef NNATOMS_ERROR_HPP
#define NNATOMS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nnatoms {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad file, negative entry, bad name).
class InputError : public Error {
public:
    using Error::Error;
};

/// A structural theorem checked at runtime did not hold. `theorem()` names
/// the result that failed so reports can point at it.
class InvariantViolation : public Error {
public:
    InvariantViolation(std::string theorem, const std::string& detail)
        : Error(theorem + ": " + detail), theorem_(std::move(theorem)) {}

    const std::string& theorem() const noexcept { return theorem_; }

private:
    std::string theorem_;
};

/// Iterative numerics that failed to converge or hit a singular system.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double last_estimate = 0.0, double gap = 0.0)
        : Error(what), last_estimate_(last_estimate), gap_(gap) {}

    double last_estimate() const noexcept { return last_estimate_; }
    double gap() const noexcept { return gap_; }

private:
    double last_estimate_;
    double gap_;
};

}  // namespace nnatoms

#endif  // NNATOMS_ERROR_HPP
