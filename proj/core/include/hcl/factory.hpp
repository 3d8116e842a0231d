#pragma once

#include <cstdint>

#include "hcl/model.hpp"
#include "hcl/params.hpp"

namespace hcl {

/// Result of the sufficient coefficient test
///   sum_{n>=2} n^delta ((n - alpha)/(1 - alpha)) |a_n| <= 1.
///
/// ok == true certifies membership of the analytic part. The test is
/// sufficient, not necessary: a function failing it may still belong to the
/// class.
struct MembershipCertificate {
    double budget_sum = 0.0;
    bool ok = false;
    ClassParams params;
};

inline constexpr double kBudgetTol = 1e-12;

/// z + ((1-alpha)/(n^delta (n-alpha))) e^{i theta} z^n, which saturates the
/// coefficient budget. Any real delta is accepted. Rejects n < 2.
TruncatedSeries extremal_h(int n, double theta, const ClassParams& params);

/// Rejects a non-normalized h.
MembershipCertificate certify(const TruncatedSeries& h, const ClassParams& params);

/// Random certified analytic part of degree max_degree whose budget is
/// exactly `fill`. Magnitudes are drawn under an n^{-delta-2} envelope, phases
/// uniformly; the same seed always yields the same series.
TruncatedSeries sample_certified_h(const ClassParams& params, int max_degree, double fill,
                                   std::uint64_t seed);

enum class DilatationFamily { moebius, custom_polynomial };

/// Random dilatation with |w(0)| = beta and random phases. The Moebius family
/// (rotation when beta = 0) is the admissible one for the class bounds. The
/// custom family is e^{i mu}(beta + (1-beta) s(z)) with s(0) = 0 and
/// sum |s_n| <= 1; it stays inside the disk but may vanish at |z| > beta.
DilatationSpec sample_dilatation(double beta, std::uint64_t seed,
                                 DilatationFamily family = DilatationFamily::moebius);

/// Assembles f = h + conj(g). Rejects an uncertified h and a dilatation whose
/// beta differs from params.beta().
HarmonicMapSpec build_member(TruncatedSeries h, DilatationSpec w, const ClassParams& params);

/// The index-th random member for a seed: degree 2 + index % 11, budget
/// fill 1 for every fourth member and uniform in [0.25, 1] otherwise, and a
/// random Moebius dilatation. Requires delta >= 0.
HarmonicMapSpec sample_member(const ClassParams& params, std::uint64_t seed, std::uint64_t index);

/// Mixes a base seed and an index into an independent stream seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace hcl
