#pragma once

#include <stdexcept>
#include <string>

namespace zb {

/// Argument outside the domain of the requested function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Series requested outside its region of convergence.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Evaluation at the corner x = y = 1 of the approximation domain.
class SingularPointError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A parameter value for which the chosen formula degenerates (e.g. division by b-1).
class DegenerateParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Iteration cap reached before the stop rule fired. Carries the best
/// available estimate and a bound on its error.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

}  // namespace zb
