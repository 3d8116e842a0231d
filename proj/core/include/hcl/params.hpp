#pragma once

#include <stdexcept>
#include <string>

namespace hcl {

/// Absolute slack used whenever a measured quantity is compared against an
/// analytic bound.
inline constexpr double kDefaultSlack = 1e-9;

/// Default absolute tolerance for the quadrature-backed bounds.
inline constexpr double kDefaultQuadTol = 1e-10;

/// Raised when a numerical kernel cannot deliver its contract (quadrature
/// that does not converge, a root count that contradicts the theory, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// The triple (alpha, beta, delta) selecting one harmonic class.
///
/// alpha is the order parameter, beta = |g'(0)| and delta the coefficient
/// weight exponent. alpha and beta are validated on construction; delta is
/// unrestricted here because the analytic class itself allows any real
/// exponent. Bound evaluators call require_nonnegative_delta().
class ClassParams {
public:
    ClassParams(double alpha, double beta, double delta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double delta() const noexcept { return delta_; }

    /// Throws std::invalid_argument when delta < 0.
    void require_nonnegative_delta() const;

    /// (2 - alpha) 2^(delta - 1); the denominator shared by every envelope.
    double kappa() const noexcept;
    /// (1 - alpha) / kappa(): slope of the |h'| distortion envelope.
    double slope() const noexcept;

    std::string to_string() const;

    friend bool operator==(const ClassParams&, const ClassParams&) = default;

private:
    double alpha_;
    double beta_;
    double delta_;
};

}  // namespace hcl
