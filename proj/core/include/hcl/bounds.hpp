#pragma once

#include <array>
#include <utility>

#include "hcl/numerics.hpp"
#include "hcl/params.hpp"

namespace hcl {

/// A (lower, upper) pair attached to a radius or coefficient index.
struct BoundEnvelope {
    double lower = 0.0;
    double upper = 0.0;
    double at = 0.0;
};

// Every evaluator below throws std::invalid_argument for delta < 0 and for
// radii outside [0, 1). Quadrature-backed ones propagate ConvergenceError.

/// Upper bound on |b_n| for n >= 2.
double bn_bound(const ClassParams& params, int n);

/// The beta = 0, delta = 1 coefficient bound through the digamma function,
/// ((1-alpha)/n)(psi(n-alpha) - psi(1-alpha)). Rejects n < 3.
double bn_bound_digamma(double alpha, int n);

/// Distortion of |h'| on |z| = r: lower = max(0, 1 - c r), upper = 1 + c r
/// with c = (1-alpha)/((2-alpha) 2^(delta-1)).
BoundEnvelope hprime_envelope(const ClassParams& params, double r);

/// Range of |w| on |z| = r given |w(0)| = beta.
BoundEnvelope dilatation_envelope(double beta, double r);

/// Side-wise product of dilatation_envelope and hprime_envelope.
BoundEnvelope gprime_envelope(const ClassParams& params, double r);

/// Growth of |g| on |z| = r from the closed forms E and F. Below beta = 1e-3
/// the closed forms lose all precision, so the |g'| envelope is integrated
/// instead.
BoundEnvelope g_growth_bounds(const ClassParams& params, double r, double tol = kDefaultQuadTol);

/// The closed forms themselves, (|F|, E) / (2^delta (2-alpha) beta^3).
/// Requires beta > 0.
BoundEnvelope g_growth_closed_form(const ClassParams& params, double r);

/// Radial integrals of the |g'| envelope on [0, r], split at xi = beta:
/// lower uses |beta - xi| / (1 - beta xi), upper (beta + xi) / (1 + beta xi).
BoundEnvelope g_growth_quadrature(const ClassParams& params, double r, double tol = kDefaultQuadTol);

/// Envelope of the area of f(D).
BoundEnvelope area_envelope(const ClassParams& params, double tol = kDefaultQuadTol);

/// Growth of |f| on |z| = r.
BoundEnvelope f_growth(const ClassParams& params, double r, double tol = kDefaultQuadTol);

/// Uniform bound M on |f| over the disk (the r -> 1 limit of the upper growth).
double normality_constant(const ClassParams& params, double tol = kDefaultQuadTol);

/// Radius of the disk covered by f(D) (the r -> 1 limit of the lower growth).
double covering_radius(const ClassParams& params, double tol = kDefaultQuadTol);

/// Ascending coefficients of the quartic H whose root in (0, 1) maximises
/// the Bloch envelope.
std::array<double, 5> bloch_H_poly(const ClassParams& params);

/// Coefficients (a0, a1) of L(beta) = H'(r) viewed as linear in beta.
std::array<double, 2> bloch_L_coeffs(const ClassParams& params, double r);

/// G(r) = ((1+r-r^2-r^3) kappa + (1-alpha)(r+r^2-r^3-r^4)) / (1 + beta r).
double bloch_G(const ClassParams& params, double r);

struct BlochResult {
    double r0 = 0.0;
    double bound = 0.0;
    std::array<double, 5> H_coeffs{};
    std::pair<double, double> bracket{};
};

/// Bloch constant bound (1+beta)/kappa * G(r0) where r0 is the unique root of
/// H in (0, 1). Uniqueness is certified with the Vincent count; any other
/// count throws NumericalError. root_tol = 0 bisects to full precision.
BlochResult bloch_bound(const ClassParams& params, double root_tol = 0.0);

}  // namespace hcl
