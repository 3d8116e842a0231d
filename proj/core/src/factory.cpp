#include "hcl/factory.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hcl {
namespace {

double budget_weight(std::size_t n, const ClassParams& p) {
    const double nd = static_cast<double>(n);
    return std::pow(nd, p.delta()) * (nd - p.alpha()) / (1.0 - p.alpha());
}

}  // namespace

TruncatedSeries extremal_h(int n, double theta, const ClassParams& params) {
    if (n < 2) {
        throw std::invalid_argument("extremal index must be >= 2");
    }
    const auto N = static_cast<std::size_t>(n);
    std::vector<Complex> a(N + 1);
    a[1] = 1.0;
    a[N] = std::polar(1.0 / budget_weight(N, params), theta);
    return TruncatedSeries(std::move(a));
}

MembershipCertificate certify(const TruncatedSeries& h, const ClassParams& params) {
    if (!h.is_normalized()) {
        throw std::invalid_argument("certify: analytic part must satisfy a0 = 0, a1 = 1");
    }
    double sum = 0.0;
    for (std::size_t n = 2; n <= h.order(); ++n) {
        sum += budget_weight(n, params) * std::abs(h[n]);
    }
    return MembershipCertificate{sum, sum <= 1.0 + kBudgetTol, params};
}

TruncatedSeries sample_certified_h(const ClassParams& params, int max_degree, double fill,
                                   std::uint64_t seed) {
    params.require_nonnegative_delta();
    if (max_degree < 2) {
        throw std::invalid_argument("max_degree must be >= 2");
    }
    if (!(fill >= 0.0 && fill <= 1.0)) {
        throw std::invalid_argument("fill must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const auto N = static_cast<std::size_t>(max_degree);
    std::vector<Complex> a(N + 1);
    a[1] = 1.0;
    double raw = 0.0;
    for (std::size_t n = 2; n <= N; ++n) {
        const double mag = unit(rng) * std::pow(static_cast<double>(n), -params.delta() - 2.0);
        const double theta = 2.0 * std::numbers::pi * unit(rng);
        a[n] = std::polar(mag, theta);
        raw += budget_weight(n, params) * mag;
    }
    const double scale = raw > 0.0 ? fill / raw : 0.0;
    for (std::size_t n = 2; n <= N; ++n) {
        a[n] *= scale;
    }
    return TruncatedSeries(std::move(a));
}

DilatationSpec sample_dilatation(double beta, std::uint64_t seed, DilatationFamily family) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double mu = 2.0 * std::numbers::pi * unit(rng);
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    if (family == DilatationFamily::moebius) {
        return DilatationSpec::moebius(beta, mu, phi);
    }

    // e^{i mu}(beta + (1 - beta) s(z)), s(0) = 0, sum |s_n| = total <= 1.
    const int degree = 1 + static_cast<int>(rng() % 6);
    const double total = 0.5 + 0.5 * unit(rng);
    std::vector<double> mags(static_cast<std::size_t>(degree));
    double sum = 0.0;
    for (auto& m : mags) {
        m = unit(rng) + 1e-3;
        sum += m;
    }
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    const Complex rot = std::polar(1.0, mu);
    c[0] = rot * beta;
    for (std::size_t n = 1; n < c.size(); ++n) {
        const double theta = 2.0 * std::numbers::pi * unit(rng);
        c[n] = rot * (1.0 - beta) * std::polar(total * mags[n - 1] / sum, theta);
    }
    return DilatationSpec::custom(TruncatedSeries(std::move(c)));
}

HarmonicMapSpec build_member(TruncatedSeries h, DilatationSpec w, const ClassParams& params) {
    if (!certify(h, params).ok) {
        throw std::invalid_argument("build_member: analytic part fails the coefficient certificate");
    }
    if (std::abs(w.beta() - params.beta()) > 1e-12) {
        throw std::invalid_argument("build_member: |w(0)| differs from beta");
    }
    return HarmonicMapSpec(std::move(h), std::move(w));
}

HarmonicMapSpec sample_member(const ClassParams& params, std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t member_seed = derive_seed(seed, index);
    double fill = 1.0;
    if (index % 4 != 0) {
        std::mt19937_64 rng(derive_seed(member_seed, 1));
        fill = std::uniform_real_distribution<double>(0.25, 1.0)(rng);
    }
    const int degree = 2 + static_cast<int>(index % 11);
    auto h = sample_certified_h(params, degree, fill, member_seed);
    auto w = sample_dilatation(params.beta(), derive_seed(member_seed, 2));
    return build_member(std::move(h), std::move(w), params);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace hcl
