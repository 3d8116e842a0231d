#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "hcl/bounds.hpp"
#include "hcl/numerics.hpp"
#include "hcl/params.hpp"

using namespace hcl;

TEST(Quadrature, Examples) {
    EXPECT_DOUBLE_EQ(adaptive_quadrature([](double) { return 1.0; }, 0, 1, 1e-12), 1.0);
    EXPECT_NEAR(adaptive_quadrature([](double x) { return (2 + x) * (1 - x) / 2; }, 0, 1, 1e-12), 7.0 / 12.0,
                1e-12);
    const std::array<double, 1> kink{0.5};
    EXPECT_NEAR(adaptive_quadrature([](double x) { return std::abs(0.5 - x); }, 0, 1, 1e-12, kink), 0.25, 1e-12);
}

TEST(Quadrature, HandlesKinkWithoutBreakpoint) {
    EXPECT_NEAR(adaptive_quadrature([](double x) { return std::abs(0.3 - x); }, 0, 1, 1e-10), 0.29, 1e-10);
}

TEST(Quadrature, EmptyAndReversedIntervals) {
    EXPECT_EQ(adaptive_quadrature([](double x) { return x; }, 0.4, 0.4, 1e-10), 0.0);
    EXPECT_THROW(adaptive_quadrature([](double x) { return x; }, 1, 0, 1e-10), std::invalid_argument);
    EXPECT_THROW(adaptive_quadrature([](double x) { return x; }, 0, 1, 0.0), std::invalid_argument);
}

TEST(Quadrature, ThrowsWhenNotConvergent) {
    const auto wild = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.123456789)); };
    EXPECT_THROW(adaptive_quadrature(wild, 0, 1, 1e-14, {}, QuadratureOptions{8, 200}), ConvergenceError);
}

TEST(Digamma, Examples) {
    EXPECT_NEAR(digamma(1.0), -0.5772156649015328606, 1e-12);
    EXPECT_NEAR(digamma(2.0) - digamma(1.0), 1.0, 1e-12);
    double harmonic = 0.0;
    for (int n = 2; n <= 20; ++n) {
        harmonic += 1.0 / (n - 1);
        EXPECT_NEAR(digamma(n) - digamma(1.0), harmonic, 1e-12) << n;
    }
    // psi(1/2) = -gamma - 2 ln 2
    EXPECT_NEAR(digamma(0.5), -1.9635100260214234794, 1e-12);
    EXPECT_NEAR(digamma(0.01), -100.56088545786867450, 1e-10);
    EXPECT_THROW(digamma(0.0), std::invalid_argument);
    EXPECT_THROW(digamma(-1.5), std::invalid_argument);
}

TEST(Polynomial, DegreeAndArithmetic) {
    EXPECT_EQ(Polynomial{}.degree(), -1);
    EXPECT_EQ((Polynomial{1, 2, 0, 0}).degree(), 1);
    const Polynomial p{-1, 1};
    const Polynomial q{1, 1};
    const Polynomial pq = p * q;
    EXPECT_EQ(pq.degree(), 2);
    EXPECT_DOUBLE_EQ(pq(3.0), 8.0);
    EXPECT_DOUBLE_EQ((p + q)(5.0), 10.0);
    EXPECT_DOUBLE_EQ(pq.derivative()(2.0), 4.0);
}

TEST(SignVariations, Examples) {
    EXPECT_EQ(sign_variations(Polynomial{3, -2, -9, -4, 0}), 1);
    EXPECT_EQ(sign_variations(Polynomial{1, 1, 1}), 0);
    EXPECT_EQ(sign_variations(Polynomial{1, -1, 1}), 2);
    EXPECT_EQ(sign_variations(Polynomial{1, 0, -1}), 1);
}

TEST(Vincent, Examples) {
    EXPECT_EQ(vincent_variation_count(Polynomial{3, -2, -9, -4, 0}, 0, 1), 1);
    EXPECT_EQ(vincent_variation_count(Polynomial{1, 1}, 0, 1), 0);
    EXPECT_EQ(vincent_variation_count(Polynomial{-0.25, 0, 1}, 0, 1), 1);
    EXPECT_THROW(vincent_variation_count(Polynomial{1, 1}, 1, 0), std::invalid_argument);
}

TEST(IsolateRoot, Examples) {
    EXPECT_NEAR(isolate_root(Polynomial{3, -2, -9, -4, 0}, 0, 1, 1e-12), 0.44300046816469139598, 1e-6);
    EXPECT_NEAR(isolate_root(Polynomial{-0.25, 0, 1}, 0, 1, 1e-12), 0.5, 1e-12);
    EXPECT_NEAR(isolate_root(Polynomial{-1, 0, 0, 0, 1}, 0, 1.5, 1e-12), 1.0, 1e-12);
    EXPECT_THROW(isolate_root(Polynomial{1, 1}, 0, 1, 1e-12), std::invalid_argument);
}

TEST(IsolateRoot, ResidualScalesWithTolerance) {
    const Polynomial p{3, -2, -9, -4, 0};
    for (double tol : {1e-4, 1e-8, 1e-12}) {
        const double r = isolate_root(p, 0, 1, tol);
        EXPECT_LE(std::abs(p(r)), std::abs(p.derivative()(r)) * tol * 10);
    }
}

TEST(IsolateRealRoots, SeparatesClusteredRoots) {
    // (x - 0.2)(x - 0.21)(x - 0.7)
    const Polynomial p = Polynomial{-0.2, 1} * Polynomial{-0.21, 1} * Polynomial{-0.7, 1};
    EXPECT_EQ(vincent_variation_count(p, 0, 1), 3);
    const auto roots = isolate_real_roots(p, 0, 1);
    ASSERT_EQ(roots.size(), 3u);
    const std::array<double, 3> expected{0.2, 0.21, 0.7};
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_LE(roots[i].lo, expected[i]);
        EXPECT_GE(roots[i].hi, expected[i]);
    }
}

// Random polynomials built from known linear and irreducible quadratic factors.
TEST(Vincent, DescartesSoundnessOnFactoredPolynomials) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> root(-1.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        Polynomial p{1.0};
        std::vector<double> roots;
        const int linear = 1 + static_cast<int>(rng() % 5);
        for (int k = 0; k < linear; ++k) {
            roots.push_back(root(rng));
            p = p * Polynomial{-roots.back(), 1.0};
        }
        if (rng() % 2) {
            // (x - s)^2 + t^2 with t > 0 has no real roots
            const double s = root(rng);
            const double t = 0.05 + unit(rng);
            p = p * Polynomial{s * s + t * t, -2 * s, 1.0};
        }
        const double a = unit(rng) * 0.5;
        const double b = a + 0.1 + unit(rng);
        const auto inside = std::count_if(roots.begin(), roots.end(), [&](double r) { return r > a && r < b; });
        const int v = vincent_variation_count(p, a, b);
        EXPECT_LE(inside, v);
        EXPECT_EQ((v - inside) % 2, 0);
    }
}

TEST(BlochPolynomial, LCoefficientsNegativeOnGrid) {
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 0.95}) {
        for (double delta : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            const ClassParams p(alpha, 0.0, delta);
            for (int i = 1; i < 40; ++i) {
                const auto L = bloch_L_coeffs(p, i / 40.0);
                EXPECT_LT(L[0], 0.0);
                EXPECT_LT(L[1], 0.0);
                EXPECT_EQ(sign_variations(Polynomial{L[0], L[1]}), 0);
            }
        }
    }
}
