#include "hcl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hcl {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this beta the E/F closed forms cancel catastrophically (both ~ beta^3).
constexpr double kClosedFormBetaMin = 1e-3;

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::invalid_argument("radius must lie in [0, 1), got " + std::to_string(r));
    }
}

// |h'| (1 - |w|) lower envelope integrated for the growth of f.
double f_lower_integrand(const ClassParams& p, double xi) {
    const double kappa = p.kappa();
    const double beta = p.beta();
    return (kappa + (1.0 - p.alpha()) * xi) * (1.0 - beta) * (1.0 - xi) / (kappa * (1.0 + beta * xi));
}

double g_upper_integrand(const ClassParams& p, double xi) {
    const double beta = p.beta();
    return (beta + xi) / (1.0 + beta * xi) * (1.0 + p.slope() * xi);
}

double g_lower_integrand(const ClassParams& p, double xi) {
    const double beta = p.beta();
    return std::abs(beta - xi) / (1.0 - beta * xi) * std::max(0.0, 1.0 - p.slope() * xi);
}

}  // namespace

double bn_bound(const ClassParams& params, int n) {
    params.require_nonnegative_delta();
    if (n < 2) {
        throw std::invalid_argument("coefficient bound needs n >= 2");
    }
    const double alpha = params.alpha();
    const double beta = params.beta();
    const double delta = params.delta();
    const double nd = n;
    const double tail = (1.0 - alpha) * beta / (std::pow(nd, delta) * (nd - alpha));
    if (n == 2) {
        return tail + 0.5 * (1.0 - beta * beta);
    }
    double sum = 0.0;
    for (int k = 1; k < n; ++k) {
        const double kd = k;
        sum += std::pow(kd, 1.0 - delta) / (kd - alpha);
    }
    return (1.0 - alpha) * (1.0 - beta * beta) / nd * sum + tail;
}

double bn_bound_digamma(double alpha, int n) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1)");
    }
    if (n < 3) {
        throw std::invalid_argument("digamma form of the coefficient bound needs n >= 3");
    }
    return (1.0 - alpha) / n * (digamma(n - alpha) - digamma(1.0 - alpha));
}

BoundEnvelope hprime_envelope(const ClassParams& params, double r) {
    params.require_nonnegative_delta();
    require_radius(r);
    const double cr = params.slope() * r;
    return {std::max(0.0, 1.0 - cr), 1.0 + cr, r};
}

BoundEnvelope dilatation_envelope(double beta, double r) {
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw std::invalid_argument("beta must lie in [0, 1)");
    }
    require_radius(r);
    return {std::abs(beta - r) / (1.0 - beta * r), (beta + r) / (1.0 + beta * r), r};
}

BoundEnvelope gprime_envelope(const ClassParams& params, double r) {
    const BoundEnvelope hp = hprime_envelope(params, r);
    const BoundEnvelope w = dilatation_envelope(params.beta(), r);
    return {std::max(0.0, w.lower * hp.lower), w.upper * hp.upper, r};
}

BoundEnvelope g_growth_closed_form(const ClassParams& params, double r) {
    params.require_nonnegative_delta();
    require_radius(r);
    const double alpha = params.alpha();
    const double beta = params.beta();
    if (!(beta > 0.0)) {
        throw std::invalid_argument("closed-form growth of g needs beta > 0");
    }
    const double K = std::exp2(params.delta()) * (2.0 - alpha);
    const double rb = r * beta;
    const double log_coeff = (2.0 - 2.0 * alpha - K * beta) * (1.0 - beta * beta);
    const double E = rb * (K * beta - (1.0 - alpha) * (2.0 - (r + 2.0 * beta) * beta)) +
                     log_coeff * std::log1p(rb);
    const double F = rb * (-K * beta + (1.0 - alpha) * (2.0 + (r - 2.0 * beta) * beta)) +
                     log_coeff * std::log1p(-rb);
    const double scale = K * beta * beta * beta;
    return {std::abs(F) / scale, E / scale, r};
}

BoundEnvelope g_growth_quadrature(const ClassParams& params, double r, double tol) {
    params.require_nonnegative_delta();
    require_radius(r);
    const double kink[] = {params.beta()};
    const double lower = adaptive_quadrature(
        [&](double xi) { return g_lower_integrand(params, xi); }, 0.0, r, tol, kink);
    const double upper = adaptive_quadrature(
        [&](double xi) { return g_upper_integrand(params, xi); }, 0.0, r, tol, kink);
    return {lower, upper, r};
}

BoundEnvelope g_growth_bounds(const ClassParams& params, double r, double tol) {
    if (params.beta() >= kClosedFormBetaMin) {
        return g_growth_closed_form(params, r);
    }
    return g_growth_quadrature(params, r, tol);
}

BoundEnvelope area_envelope(const ClassParams& params, double tol) {
    params.require_nonnegative_delta();
    const double beta = params.beta();
    const double c = params.slope();
    const double inner_tol = tol / kTwoPi;
    const double lower = adaptive_quadrature(
        [&](double r) {
            const double w = (beta + r) / (1.0 + beta * r);
            const double hp = 1.0 - c * r;
            return r * hp * hp * (1.0 - w * w);
        },
        0.0, 1.0, inner_tol);
    const double upper = adaptive_quadrature(
        [&](double r) {
            const double w = (beta - r) / (1.0 - beta * r);
            const double hp = 1.0 + c * r;
            return r * hp * hp * (1.0 - w * w);
        },
        0.0, 1.0, inner_tol);
    return {kTwoPi * lower, kTwoPi * upper, 1.0};
}

BoundEnvelope f_growth(const ClassParams& params, double r, double tol) {
    params.require_nonnegative_delta();
    require_radius(r);
    const double alpha = params.alpha();
    const double lower = adaptive_quadrature(
        [&](double xi) { return f_lower_integrand(params, xi); }, 0.0, r, tol);
    const double h_growth = r + r * r * (1.0 - alpha) / (std::exp2(params.delta()) * (2.0 - alpha));
    const double g_part = adaptive_quadrature(
        [&](double xi) { return g_upper_integrand(params, xi); }, 0.0, r, tol);
    return {lower, h_growth + g_part, r};
}

double normality_constant(const ClassParams& params, double tol) {
    params.require_nonnegative_delta();
    const double alpha = params.alpha();
    const double g_part = adaptive_quadrature(
        [&](double xi) { return g_upper_integrand(params, xi); }, 0.0, 1.0, tol);
    return 1.0 + (1.0 - alpha) / (std::exp2(params.delta()) * (2.0 - alpha)) + g_part;
}

double covering_radius(const ClassParams& params, double tol) {
    params.require_nonnegative_delta();
    return adaptive_quadrature([&](double xi) { return f_lower_integrand(params, xi); }, 0.0, 1.0,
                               tol);
}

std::array<double, 5> bloch_H_poly(const ClassParams& params) {
    params.require_nonnegative_delta();
    const double kappa = params.kappa();
    const double a1 = 1.0 - params.alpha();
    const double beta = params.beta();
    return {
        kappa * (1.0 - beta) + a1,
        -2.0 * (kappa - a1),
        -(kappa * (3.0 + beta) + a1 * (3.0 - beta)),
        -(2.0 * kappa * beta + a1 * (4.0 + 2.0 * beta)),
        -3.0 * a1 * beta,
    };
}

std::array<double, 2> bloch_L_coeffs(const ClassParams& params, double r) {
    params.require_nonnegative_delta();
    const double a1 = 1.0 - params.alpha();
    const double two_kappa = std::exp2(params.delta()) * (2.0 - params.alpha());
    const double quad = 1.0 - 3.0 * r - 6.0 * r * r;
    return {
        2.0 * a1 * quad - two_kappa * (1.0 + 3.0 * r),
        -two_kappa * (1.0 + 3.0 * r) * r + 2.0 * a1 * quad * r,
    };
}

double bloch_G(const ClassParams& params, double r) {
    const double r2 = r * r;
    const double r3 = r2 * r;
    const double r4 = r3 * r;
    return ((1.0 + r - r2 - r3) * params.kappa() + (1.0 - params.alpha()) * (r + r2 - r3 - r4)) /
           (1.0 + params.beta() * r);
}

BlochResult bloch_bound(const ClassParams& params, double root_tol) {
    const auto coeffs = bloch_H_poly(params);
    const Polynomial H(std::vector<double>(coeffs.begin(), coeffs.end()));

    const int variations = vincent_variation_count(H, 0.0, 1.0);
    RootInterval bracket{0.0, 1.0};
    if (variations != 1) {
        // Two or more variations is inconclusive rather than wrong; subdivide.
        const auto isolated = variations >= 2 ? isolate_real_roots(H, 0.0, 1.0)
                                              : std::vector<RootInterval>{};
        if (isolated.size() != 1) {
            throw NumericalError("expected exactly one root of H in (0, 1) for " +
                                 params.to_string() + ", Vincent count " +
                                 std::to_string(variations) + ", isolated " +
                                 std::to_string(isolated.size()));
        }
        bracket = isolated.front();
    }
    const auto [lo, hi] = bisection_bracket(H, bracket.lo, bracket.hi, root_tol);
    const double r0 = 0.5 * (lo + hi);
    return {r0, (1.0 + params.beta()) / params.kappa() * bloch_G(params, r0), coeffs, {lo, hi}};
}

}  // namespace hcl
