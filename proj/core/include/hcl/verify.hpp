#pragma once

#include <span>
#include <string>
#include <vector>

#include "hcl/bounds.hpp"
#include "hcl/model.hpp"
#include "hcl/params.hpp"

namespace hcl {

/// Polar sample grid: `radii` Chebyshev-Lobatto radii on [0, r_max] times
/// `angles` equispaced angles. Doubling (radii - 1) and angles nests grids.
struct PolarGrid {
    int radii = 64;
    int angles = 128;
    double r_max = 0.995;

    std::vector<double> radius_nodes() const;
    std::vector<double> angle_nodes() const;
};

enum class Theorem { coeff, distortion, g_growth, area, f_growth, covering, bloch, convexity };

const char* to_string(Theorem t) noexcept;

/// Outcome of comparing measured quantities with one family of bounds.
/// worst_margin = bound - measured at the tightest point (negative means a
/// violation); passed <=> worst_margin >= -slack.
struct VerificationReport {
    Theorem theorem = Theorem::coeff;
    bool passed = false;
    double worst_margin = 0.0;
    std::string witness;
    double slack = kDefaultSlack;
    /// Extra qualifier, e.g. "proxy" for the covering check.
    std::string note;
};

struct VerifyOptions {
    PolarGrid grid{};
    double slack = kDefaultSlack;
    double tol = kDefaultQuadTol;
    int n_max = 20;
    int boundary_samples = 1024;
    double covering_radius_probe = 0.999;
};

/// |b_n| against bn_bound for 2 <= n <= n_max.
VerificationReport verify_coefficients(const HarmonicMapSpec& f, const ClassParams& params, int n_max,
                                       double slack = kDefaultSlack);

/// |h'| and |g'| = |w||h'| against their envelopes at every grid point.
VerificationReport verify_distortion(const HarmonicMapSpec& f, const ClassParams& params,
                                     const PolarGrid& grid, double slack = kDefaultSlack);

/// min/max of |g| on each grid circle against the integrated |g'| envelope.
VerificationReport verify_g_growth(const HarmonicMapSpec& f, const ClassParams& params,
                                   const PolarGrid& grid, double tol = kDefaultQuadTol,
                                   double slack = kDefaultSlack);

/// Area of f(D): radial adaptive quadrature of the 128-point angular
/// trapezoid of J_f, compared with area_envelope.
double measured_area(const HarmonicMapSpec& f, double tol = kDefaultQuadTol);
VerificationReport verify_area(const HarmonicMapSpec& f, const ClassParams& params,
                               double tol = kDefaultQuadTol, double slack = kDefaultSlack);

/// min/max of |f| on each grid circle against f_growth.
VerificationReport verify_f_growth(const HarmonicMapSpec& f, const ClassParams& params,
                                   const PolarGrid& grid, double tol = kDefaultQuadTol,
                                   double slack = kDefaultSlack);

/// min |f| on |z| = probe (default 0.999) against the lower growth bound.
/// This checks the inequality that implies the covering disk, not image
/// containment itself, and is labelled "proxy". Rejects boundary_samples < 64.
VerificationReport verify_covering(const HarmonicMapSpec& f, const ClassParams& params,
                                   int boundary_samples, double tol = kDefaultQuadTol,
                                   double slack = kDefaultSlack, double probe = 0.999);

/// max over the grid of (1 - |z|^2)(|h'| + |g'|).
double measured_bloch(const HarmonicMapSpec& f, const PolarGrid& grid);
VerificationReport verify_bloch(const HarmonicMapSpec& f, const ClassParams& params,
                                const PolarGrid& grid, double slack = kDefaultSlack);

/// Certifies lambda h1 + (1-lambda) h2 for each lambda. Rejects beta != 0
/// and delta < 0.
VerificationReport verify_convexity(const TruncatedSeries& h1, const TruncatedSeries& h2,
                                    std::span<const double> lambdas, const ClassParams& params,
                                    double slack = kDefaultSlack);

/// Envelope values that depend only on (params, grid); shared by every
/// member verified at the same parameter point.
struct ReferenceBounds {
    ClassParams params;
    PolarGrid grid;
    std::vector<double> radii;
    std::vector<BoundEnvelope> hprime;
    std::vector<BoundEnvelope> gprime;
    std::vector<BoundEnvelope> g_growth;
    std::vector<BoundEnvelope> f_growth;
    BoundEnvelope area;
    double covering_lower = 0.0;
    double bloch = 0.0;
    std::vector<double> coeff;  // index n, valid for n >= 2
};

ReferenceBounds reference_bounds(const ClassParams& params, const VerifyOptions& options);

/// The seven per-member checks in enum order (coeff .. bloch).
std::vector<VerificationReport> verify_member(const HarmonicMapSpec& f, const ReferenceBounds& ref,
                                              const VerifyOptions& options);

}  // namespace hcl
