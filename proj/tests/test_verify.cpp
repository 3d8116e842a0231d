#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "hcl/bounds.hpp"
#include "hcl/factory.hpp"
#include "hcl/json_io.hpp"
#include "hcl/verify.hpp"

using namespace hcl;

namespace {

constexpr double kPi = std::numbers::pi;
const ClassParams kBase(0.0, 0.0, 1.0);

HarmonicMapSpec identity_with_rotation() {
    return build_member(TruncatedSeries{0.0, 1.0}, DilatationSpec::rotation(0, 0), kBase);
}

HarmonicMapSpec extremal_member() {
    return build_member(extremal_h(2, 0.0, kBase), DilatationSpec::rotation(0, 0), kBase);
}

void expect_consistent(const VerificationReport& r) {
    EXPECT_EQ(r.passed, r.worst_margin >= -r.slack) << to_string(r.theorem);
    EXPECT_FALSE(r.witness.empty());
}

}  // namespace

TEST(PolarGrid, NodesNestUnderRefinement) {
    const PolarGrid coarse{17, 32, 0.995};
    const PolarGrid fine{33, 64, 0.995};
    const auto rc = coarse.radius_nodes();
    const auto rf = fine.radius_nodes();
    ASSERT_EQ(rc.size(), 17u);
    EXPECT_EQ(rc.front(), 0.0);
    EXPECT_DOUBLE_EQ(rc.back(), 0.995);
    for (std::size_t i = 0; i < rc.size(); ++i) EXPECT_NEAR(rc[i], rf[2 * i], 1e-15);
    const auto ac = coarse.angle_nodes();
    const auto af = fine.angle_nodes();
    for (std::size_t i = 0; i < ac.size(); ++i) EXPECT_NEAR(ac[i], af[2 * i], 1e-15);
}

TEST(VerifyCoefficients, ExtremalIsSharpAtTwo) {
    const auto r = verify_coefficients(extremal_member(), kBase, 2);
    EXPECT_TRUE(r.passed);
    EXPECT_NEAR(r.worst_margin, 0.0, 1e-12);
    expect_consistent(r);

    const auto all = verify_coefficients(identity_with_rotation(), kBase, 20);
    EXPECT_TRUE(all.passed);
}

TEST(VerifyDistortion, IdentityAndExtremal) {
    const PolarGrid grid{32, 32, 0.995};
    EXPECT_TRUE(verify_distortion(identity_with_rotation(), kBase, grid).passed);
    // |h'(r)| = 1 + r/2 along theta = 0 touches the upper envelope.
    const auto r = verify_distortion(extremal_member(), kBase, grid);
    EXPECT_TRUE(r.passed);
    EXPECT_NEAR(r.worst_margin, 0.0, 1e-12);
}

TEST(VerifyArea, IdentityWithRotationIsHalfPi) {
    const auto f = identity_with_rotation();
    EXPECT_NEAR(measured_area(f), kPi / 2, 1e-6);
    const auto r = verify_area(f, kBase);
    EXPECT_TRUE(r.passed);
    expect_consistent(r);
}

// w = 0 has |b1| = 0 but |w| does not reach |z|; the envelope for members
// with a Moebius dilatation does not apply and is exceeded.
TEST(VerifyArea, ZeroDilatationIsOutsideTheEnvelope) {
    const HarmonicMapSpec f(TruncatedSeries{0.0, 1.0}, DilatationSpec::custom(TruncatedSeries{0.0}));
    EXPECT_NEAR(measured_area(f), kPi, 1e-6);
    EXPECT_FALSE(verify_area(f, kBase).passed);
}

TEST(VerifyBloch, IdentityWithRotation) {
    const auto f = identity_with_rotation();
    // max of (1 - r^2)(1 + r) is 32/27 at r = 1/3
    const PolarGrid grid{513, 16, 0.995};
    EXPECT_NEAR(measured_bloch(f, grid), 32.0 / 27.0, 1e-4);
    EXPECT_TRUE(verify_bloch(f, kBase, grid).passed);
    EXPECT_TRUE(verify_bloch(extremal_member(), kBase, PolarGrid{}).passed);
}

TEST(VerifyBloch, RefinementIsMonotone) {
    const ClassParams p(0.3, 0.3, 1);
    const double bound = bloch_bound(p).bound;
    for (std::uint64_t k = 0; k < 6; ++k) {
        const auto f = sample_member(p, 3, k);
        double prev = 0.0;
        for (int level = 0; level < 4; ++level) {
            const PolarGrid grid{8 * (1 << level) + 1, 16 * (1 << level), 0.995};
            const double m = measured_bloch(f, grid);
            EXPECT_GE(m, prev);
            EXPECT_LE(m, bound + kDefaultSlack);
            prev = m;
        }
    }
}

TEST(VerifyCovering, IdentityPassesAndIsLabelledProxy) {
    const HarmonicMapSpec f(TruncatedSeries{0.0, 1.0}, DilatationSpec::custom(TruncatedSeries{0.0}));
    const auto r = verify_covering(f, kBase, 256);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.note, "proxy");
    EXPECT_NEAR(r.worst_margin, 0.999 - f_growth(kBase, 0.999).lower, 1e-9);
    EXPECT_THROW(verify_covering(f, kBase, 32), std::invalid_argument);
}

TEST(VerifyCovering, NearUnitBetaIsTrivial) {
    const ClassParams p(0.2, 0.999, 1);
    EXPECT_TRUE(verify_covering(sample_member(p, 1, 0), p, 128).passed);
}

// Admissible members for which the displayed lower growth envelopes fail.
// h = z, w = z at (0, 0, 1): f = z + conj(z^2)/2 has |f| = r - r^2/2 at
// angle pi/3, which tends to 1/2 < 7/12.
TEST(GrowthLowerEnvelope, KnownCounterexample) {
    const auto f = identity_with_rotation();
    const Complex z = std::polar(0.999, kPi / 3);
    EXPECT_NEAR(std::abs(f.value(z)), 0.999 - 0.999 * 0.999 / 2, 1e-12);
    const auto cover = verify_covering(f, kBase, 1024);
    EXPECT_FALSE(cover.passed);
    EXPECT_LT(cover.worst_margin, -0.08);
    EXPECT_FALSE(verify_f_growth(f, kBase, PolarGrid{}).passed);
}

TEST(GrowthLowerEnvelope, GGrowthFailsForPositiveBeta) {
    const ClassParams p(0, 0.6, 0);
    const auto f = sample_member(p, 7, 0);
    const auto r = verify_g_growth(f, p, PolarGrid{});
    EXPECT_FALSE(r.passed);
    expect_consistent(r);
}

// A polynomial dilatation with |w(0)| = beta may vanish at |z| > beta, so
// the |g'| lower envelope does not apply to it.
TEST(VerifyDistortion, CustomDilatationCanBreakLowerEnvelope) {
    const ClassParams p(0, 0.2, 1);
    const auto w = DilatationSpec::custom(TruncatedSeries{0.2, 0.0, -0.5});
    const HarmonicMapSpec f(TruncatedSeries{0.0, 1.0}, w);
    // w vanishes on |z| = sqrt(0.4) where the envelope is positive.
    EXPECT_NEAR(std::abs(w(std::sqrt(0.4))), 0.0, 1e-15);
    EXPECT_GT(gprime_envelope(p, std::sqrt(0.4)).lower, 0.0);
    EXPECT_FALSE(verify_distortion(f, p, PolarGrid{}).passed);
}

TEST(VerifyConvexity, Examples) {
    const auto f2 = extremal_h(2, 0.0, kBase);
    const auto f3 = extremal_h(3, 0.0, kBase);
    const std::array<double, 5> lambdas{0, 0.25, 0.5, 0.75, 1};
    auto r = verify_convexity(f2, f2, lambdas, kBase);
    EXPECT_TRUE(r.passed);
    EXPECT_NEAR(r.worst_margin, 0.0, 1e-12);
    const std::array<double, 1> half{0.5};
    r = verify_convexity(f2, f3, half, kBase);
    EXPECT_TRUE(r.passed);
    EXPECT_NEAR(r.worst_margin, 0.0, 1e-12);

    EXPECT_THROW(verify_convexity(f2, f3, half, ClassParams(0, 0.3, 1)), std::invalid_argument);
    EXPECT_THROW(verify_convexity(f2, f3, half, ClassParams(0, 0, -1)), std::invalid_argument);
}

TEST(VerifyConvexity, RandomCertifiedPairs) {
    const std::array<double, 5> lambdas{0, 0.25, 0.5, 0.75, 1};
    for (double alpha : {0.0, 0.5}) {
        for (double delta : {0.0, 1.0, 2.5}) {
            const ClassParams p(alpha, 0.0, delta);
            for (std::uint64_t s = 0; s < 20; ++s) {
                const auto h1 = sample_certified_h(p, 2 + static_cast<int>(s % 7), 1.0, s);
                const auto h2 = sample_certified_h(p, 3 + static_cast<int>(s % 5), 0.8, s + 1000);
                EXPECT_TRUE(verify_convexity(h1, h2, lambdas, p).passed);
            }
        }
    }
}

TEST(VerifyMember, ReturnsSevenReportsInOrder) {
    const ClassParams p(0.3, 0.5, 1);
    VerifyOptions options;
    const auto ref = reference_bounds(p, options);
    const auto reports = verify_member(sample_member(p, 7, 0), ref, options);
    ASSERT_EQ(reports.size(), 7u);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        EXPECT_EQ(reports[i].theorem, static_cast<Theorem>(i));
        expect_consistent(reports[i]);
        const auto j = to_json(reports[i], p, 0);
        EXPECT_EQ(j.at("theorem"), to_string(reports[i].theorem));
        EXPECT_EQ(j.at("passed"), reports[i].passed);
    }
}

// Checks that the sampled members satisfy the bounds that do hold for the
// whole admissible family.
TEST(VerifyMember, SoundChecksPassOnSuite) {
    VerifyOptions options;
    options.grid = PolarGrid{33, 64, 0.995};
    for (double alpha : {0.0, 0.3}) {
        for (double beta : {0.0, 0.5}) {
            for (double delta : {0.0, 1.0}) {
                const ClassParams p(alpha, beta, delta);
                const auto ref = reference_bounds(p, options);
                for (std::uint64_t k = 0; k < 25; ++k) {
                    const auto reports = verify_member(sample_member(p, 11, k), ref, options);
                    for (Theorem t : {Theorem::coeff, Theorem::distortion, Theorem::area, Theorem::bloch}) {
                        const auto& r = reports[static_cast<std::size_t>(t)];
                        EXPECT_TRUE(r.passed) << to_string(t) << " " << p.to_string() << " member " << k
                                              << " margin " << r.worst_margin << " at " << r.witness;
                    }
                }
            }
        }
    }
}
