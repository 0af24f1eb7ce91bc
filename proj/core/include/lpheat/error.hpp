#pragma once

#include <stdexcept>
#include <string>

namespace lpheat {

enum class ErrorKind {
    kDomain,            // argument outside the admissible set
    kUnsupported,       // valid mathematically but not provided (e.g. derivative order > 8)
    kMembership,        // function is not in the requested L^p space
    kAccuracy,          // quadrature did not reach its tolerance
    kApproximation,     // step approximation could not reach epsilon
    kSearch,            // witness search found nothing in the interval
    kPrecondition,      // caller violated an operation precondition
    kNoValidExponent,   // 1/p + 1/q < 1, so no r exists
    kResolution,        // grid too coarse for the kernel
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when adaptive quadrature exhausts its subdivision budget.
/// Carries the error estimate it did reach.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double value, double residual)
        : Error(ErrorKind::kAccuracy, what), value_(value), residual_(residual) {}
    double value() const noexcept { return value_; }
    double residual() const noexcept { return residual_; }

private:
    double value_;
    double residual_;
};

class ApproximationError : public Error {
public:
    ApproximationError(const std::string& what, double best_error)
        : Error(ErrorKind::kApproximation, what), best_error_(best_error) {}
    double best_error() const noexcept { return best_error_; }

private:
    double best_error_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace lpheat
