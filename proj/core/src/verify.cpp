#include "hcl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hcl/factory.hpp"

namespace hcl {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kAreaAngles = 128;

std::string point(Complex z) {
    std::ostringstream os;
    os.precision(6);
    os << "z=" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

// Running minimum of margins together with a lazily formatted witness.
class MarginTracker {
public:
    template <class Describe>
    void offer(double margin, Describe&& describe) {
        if (margin < worst_) {
            worst_ = margin;
            witness_ = describe();
        }
    }

    VerificationReport report(Theorem t, double slack, std::string note = {}) const {
        const double margin = std::isfinite(worst_) ? worst_ : 0.0;
        return VerificationReport{t, margin >= -slack, margin, witness_, slack, std::move(note)};
    }

private:
    double worst_ = kInf;
    std::string witness_ = "none";
};

std::string describe(const char* what, double measured, double bound, Complex z) {
    std::ostringstream os;
    os.precision(10);
    os << point(z) << " " << what << "=" << measured << " bound=" << bound;
    return os.str();
}

VerificationReport coefficients_impl(const HarmonicMapSpec& f, std::span<const double> bounds,
                                     int n_max, double slack) {
    MarginTracker t;
    const int top = std::min<int>(n_max, static_cast<int>(f.g().order()));
    for (int n = 2; n <= top; ++n) {
        const double b = std::abs(f.g()[static_cast<std::size_t>(n)]);
        const double bound = bounds[static_cast<std::size_t>(n)];
        t.offer(bound - b, [&] {
            std::ostringstream os;
            os.precision(12);
            os << "n=" << n << " |b_n|=" << b << " bound=" << bound;
            return os.str();
        });
    }
    return t.report(Theorem::coeff, slack);
}

VerificationReport distortion_impl(const HarmonicMapSpec& f, std::span<const double> radii,
                                   std::span<const double> angles,
                                   std::span<const BoundEnvelope> hp_env,
                                   std::span<const BoundEnvelope> gp_env, double slack) {
    MarginTracker t;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const BoundEnvelope& he = hp_env[i];
        const BoundEnvelope& ge = gp_env[i];
        for (double theta : angles) {
            const Complex z = std::polar(radii[i], theta);
            const double hp = std::abs(evaluate(f.h_prime(), z));
            const double gp = std::abs(f.w()(z)) * hp;
            t.offer(hp - he.lower, [&] { return describe("|h'|", hp, he.lower, z); });
            t.offer(he.upper - hp, [&] { return describe("|h'|", hp, he.upper, z); });
            t.offer(gp - ge.lower, [&] { return describe("|g'|", gp, ge.lower, z); });
            t.offer(ge.upper - gp, [&] { return describe("|g'|", gp, ge.upper, z); });
        }
    }
    return t.report(Theorem::distortion, slack);
}

template <class Value>
VerificationReport circle_growth_impl(Theorem theorem, const char* what, Value&& value,
                                      std::span<const double> radii, std::span<const double> angles,
                                      std::span<const BoundEnvelope> env, double slack,
                                      std::string note = {}) {
    MarginTracker t;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        double lo = kInf;
        double hi = -kInf;
        Complex z_lo{}, z_hi{};
        for (double theta : angles) {
            const Complex z = std::polar(radii[i], theta);
            const double m = std::abs(value(z));
            if (m < lo) { lo = m; z_lo = z; }
            if (m > hi) { hi = m; z_hi = z; }
        }
        t.offer(lo - env[i].lower, [&] { return describe(what, lo, env[i].lower, z_lo); });
        t.offer(env[i].upper - hi, [&] { return describe(what, hi, env[i].upper, z_hi); });
    }
    return t.report(theorem, slack, std::move(note));
}

VerificationReport area_impl(const HarmonicMapSpec& f, const BoundEnvelope& env, double tol,
                             double slack) {
    const double a = measured_area(f, tol);
    MarginTracker t;
    t.offer(a - env.lower, [&] { return describe("area", a, env.lower, {}); });
    t.offer(env.upper - a, [&] { return describe("area", a, env.upper, {}); });
    return t.report(Theorem::area, slack);
}

VerificationReport covering_impl(const HarmonicMapSpec& f, double probe, double lower,
                                 int samples, double slack) {
    if (samples < 64) {
        throw std::invalid_argument("covering check needs at least 64 boundary samples");
    }
    MarginTracker t;
    for (int j = 0; j < samples; ++j) {
        const Complex z = std::polar(probe, 2.0 * std::numbers::pi * j / samples);
        const double m = std::abs(f.value(z));
        t.offer(m - lower, [&] { return describe("|f|", m, lower, z); });
    }
    return t.report(Theorem::covering, slack, "proxy");
}

VerificationReport bloch_impl(const HarmonicMapSpec& f, const PolarGrid& grid, double bound,
                              double slack) {
    double best = -kInf;
    Complex at{};
    const auto radii = grid.radius_nodes();
    const auto angles = grid.angle_nodes();
    for (double r : radii) {
        for (double theta : angles) {
            const Complex z = std::polar(r, theta);
            const double v = (1.0 - r * r) * lambda_at(f, z);
            if (v > best) { best = v; at = z; }
        }
    }
    MarginTracker t;
    t.offer(bound - best, [&] { return describe("(1-|z|^2)Lambda", best, bound, at); });
    return t.report(Theorem::bloch, slack);
}

std::vector<double> coefficient_bounds(const ClassParams& params, int n_max) {
    std::vector<double> out(static_cast<std::size_t>(std::max(n_max, 1)) + 1, 0.0);
    for (int n = 2; n <= n_max; ++n) {
        out[static_cast<std::size_t>(n)] = bn_bound(params, n);
    }
    return out;
}

}  // namespace

std::vector<double> PolarGrid::radius_nodes() const {
    if (radii < 2 || !(r_max > 0.0 && r_max < 1.0)) {
        throw std::invalid_argument("polar grid needs >= 2 radii and 0 < r_max < 1");
    }
    std::vector<double> out(static_cast<std::size_t>(radii));
    for (int i = 0; i < radii; ++i) {
        out[static_cast<std::size_t>(i)] =
            0.5 * r_max * (1.0 - std::cos(std::numbers::pi * i / (radii - 1)));
    }
    out.back() = r_max;
    return out;
}

std::vector<double> PolarGrid::angle_nodes() const {
    if (angles < 1) {
        throw std::invalid_argument("polar grid needs >= 1 angle");
    }
    std::vector<double> out(static_cast<std::size_t>(angles));
    for (int j = 0; j < angles; ++j) {
        out[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / angles;
    }
    return out;
}

const char* to_string(Theorem t) noexcept {
    switch (t) {
        case Theorem::coeff: return "coeff";
        case Theorem::distortion: return "distortion";
        case Theorem::g_growth: return "g_growth";
        case Theorem::area: return "area";
        case Theorem::f_growth: return "f_growth";
        case Theorem::covering: return "covering";
        case Theorem::bloch: return "bloch";
        case Theorem::convexity: return "convexity";
    }
    return "?";
}

VerificationReport verify_coefficients(const HarmonicMapSpec& f, const ClassParams& params, int n_max,
                                       double slack) {
    return coefficients_impl(f, coefficient_bounds(params, n_max), n_max, slack);
}

VerificationReport verify_distortion(const HarmonicMapSpec& f, const ClassParams& params,
                                     const PolarGrid& grid, double slack) {
    const auto radii = grid.radius_nodes();
    std::vector<BoundEnvelope> hp, gp;
    for (double r : radii) {
        hp.push_back(hprime_envelope(params, r));
        gp.push_back(gprime_envelope(params, r));
    }
    return distortion_impl(f, radii, grid.angle_nodes(), hp, gp, slack);
}

VerificationReport verify_g_growth(const HarmonicMapSpec& f, const ClassParams& params,
                                   const PolarGrid& grid, double tol, double slack) {
    const auto radii = grid.radius_nodes();
    std::vector<BoundEnvelope> env;
    for (double r : radii) {
        env.push_back(g_growth_quadrature(params, r, tol));
    }
    return circle_growth_impl(
        Theorem::g_growth, "|g|", [&](Complex z) { return evaluate(f.g(), z); }, radii,
        grid.angle_nodes(), env, slack);
}

double measured_area(const HarmonicMapSpec& f, double tol) {
    // The angular trapezoid is spectrally accurate for these periodic integrands.
    const double dtheta = 2.0 * std::numbers::pi / kAreaAngles;
    return adaptive_quadrature(
        [&](double r) {
            double ring = 0.0;
            for (int j = 0; j < kAreaAngles; ++j) {
                ring += jacobian_at(f, std::polar(r, j * dtheta));
            }
            return r * ring * dtheta;
        },
        0.0, 1.0, tol);
}

VerificationReport verify_area(const HarmonicMapSpec& f, const ClassParams& params, double tol,
                               double slack) {
    return area_impl(f, area_envelope(params, tol), tol, slack);
}

VerificationReport verify_f_growth(const HarmonicMapSpec& f, const ClassParams& params,
                                   const PolarGrid& grid, double tol, double slack) {
    const auto radii = grid.radius_nodes();
    std::vector<BoundEnvelope> env;
    for (double r : radii) {
        env.push_back(hcl::f_growth(params, r, tol));
    }
    return circle_growth_impl(
        Theorem::f_growth, "|f|", [&](Complex z) { return f.value(z); }, radii, grid.angle_nodes(),
        env, slack);
}

VerificationReport verify_covering(const HarmonicMapSpec& f, const ClassParams& params,
                                   int boundary_samples, double tol, double slack, double probe) {
    return covering_impl(f, probe, f_growth(params, probe, tol).lower, boundary_samples, slack);
}

double measured_bloch(const HarmonicMapSpec& f, const PolarGrid& grid) {
    double best = 0.0;
    for (double r : grid.radius_nodes()) {
        for (double theta : grid.angle_nodes()) {
            best = std::max(best, (1.0 - r * r) * lambda_at(f, std::polar(r, theta)));
        }
    }
    return best;
}

VerificationReport verify_bloch(const HarmonicMapSpec& f, const ClassParams& params,
                                const PolarGrid& grid, double slack) {
    return bloch_impl(f, grid, bloch_bound(params).bound, slack);
}

VerificationReport verify_convexity(const TruncatedSeries& h1, const TruncatedSeries& h2,
                                    std::span<const double> lambdas, const ClassParams& params,
                                    double slack) {
    if (params.beta() != 0.0) {
        throw std::invalid_argument("convexity holds for beta = 0 only");
    }
    params.require_nonnegative_delta();
    MarginTracker t;
    for (double lambda : lambdas) {
        const auto cert = certify(convex_combination(h1, h2, lambda), params);
        t.offer(1.0 - cert.budget_sum, [&] {
            std::ostringstream os;
            os.precision(12);
            os << "lambda=" << lambda << " budget=" << cert.budget_sum;
            return os.str();
        });
    }
    return t.report(Theorem::convexity, slack);
}

ReferenceBounds reference_bounds(const ClassParams& params, const VerifyOptions& options) {
    params.require_nonnegative_delta();
    ReferenceBounds ref{params, options.grid, options.grid.radius_nodes(), {}, {}, {}, {}, {}, 0.0,
                        0.0, {}};
    for (double r : ref.radii) {
        ref.hprime.push_back(hprime_envelope(params, r));
        ref.gprime.push_back(gprime_envelope(params, r));
        ref.g_growth.push_back(g_growth_quadrature(params, r, options.tol));
        ref.f_growth.push_back(hcl::f_growth(params, r, options.tol));
    }
    ref.area = area_envelope(params, options.tol);
    ref.covering_lower = hcl::f_growth(params, options.covering_radius_probe, options.tol).lower;
    ref.bloch = bloch_bound(params).bound;
    ref.coeff = coefficient_bounds(params, options.n_max);
    return ref;
}

std::vector<VerificationReport> verify_member(const HarmonicMapSpec& f, const ReferenceBounds& ref,
                                              const VerifyOptions& options) {
    const auto angles = ref.grid.angle_nodes();
    const double slack = options.slack;
    std::vector<VerificationReport> out;
    out.reserve(7);
    out.push_back(coefficients_impl(f, ref.coeff, options.n_max, slack));
    out.push_back(distortion_impl(f, ref.radii, angles, ref.hprime, ref.gprime, slack));
    out.push_back(circle_growth_impl(
        Theorem::g_growth, "|g|", [&](Complex z) { return evaluate(f.g(), z); }, ref.radii, angles,
        ref.g_growth, slack));
    out.push_back(area_impl(f, ref.area, options.tol, slack));
    out.push_back(circle_growth_impl(
        Theorem::f_growth, "|f|", [&](Complex z) { return f.value(z); }, ref.radii, angles,
        ref.f_growth, slack));
    out.push_back(covering_impl(f, options.covering_radius_probe, ref.covering_lower,
                                options.boundary_samples, slack));
    out.push_back(bloch_impl(f, ref.grid, ref.bloch, slack));
    return out;
}

}  // namespace hcl
