#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hcl {

using RealFunction = std::function<double(double)>;

struct QuadratureOptions {
    /// Maximum bisection depth of any panel before giving up.
    int max_depth = 40;
    /// Hard cap on the number of live panels.
    int max_panels = 20000;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// The interval is first split at every breakpoint inside (a, b); panels are
/// then bisected, worst error first, until the summed |K15 - G7| estimates
/// drop to `tol`. Throws ConvergenceError when a panel exceeds max_depth or
/// the panel budget runs out, and std::invalid_argument for a > b or tol <= 0.
double adaptive_quadrature(const RealFunction& f, double a, double b, double tol,
                           std::span<const double> breakpoints = {},
                           QuadratureOptions options = {});

/// Digamma function, |error| <= 1e-12 for x > 0. Rejects x <= 0.
double digamma(double x);

/// Real polynomial with ascending coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs) : Polynomial(std::vector<double>(coeffs)) {}

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    /// Index of the highest non-zero coefficient; -1 for the zero polynomial.
    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return degree_ < 0; }

    double operator()(double x) const noexcept;
    Polynomial derivative() const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);

private:
    std::vector<double> coeffs_;
    int degree_ = -1;
};

/// Strict sign changes in the sequence of non-zero coefficients.
int sign_variations(const Polynomial& p);

/// sign_variations of (1+x)^n p((a + b x)/(1 + x)), n = deg p. Bounds the
/// number of roots of p in (a, b) and has the same parity. Requires
/// 0 <= a < b.
int vincent_variation_count(const Polynomial& p, double a, double b);

/// Final bisection bracket of a sign change of p in [a, b]. Stops once the
/// width is <= tol or the midpoint can no longer be separated from an end.
/// Rejects p(a) p(b) >= 0 unless one end is an exact root.
std::pair<double, double> bisection_bracket(const Polynomial& p, double a, double b, double tol);

/// Midpoint of bisection_bracket.
double isolate_root(const Polynomial& p, double a, double b, double tol);

struct RootInterval {
    double lo;
    double hi;
};

/// Intervals in (a, b) each holding exactly one root of p, found by
/// subdividing wherever the Vincent count is 2 or more. A root hit exactly
/// at a split point is reported as a degenerate interval [x, x].
/// Throws NumericalError if subdivision exceeds max_depth.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, double a, double b,
                                             int max_depth = 60);

}  // namespace hcl
