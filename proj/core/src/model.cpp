#include "hcl/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hcl {
namespace {

Complex cis(double t) { return std::polar(1.0, t); }

void require_beta(double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw std::invalid_argument("dilatation beta must lie in [0, 1)");
    }
}

}  // namespace

DilatationSpec DilatationSpec::moebius(double beta, double mu, double phi) {
    require_beta(beta);
    return DilatationSpec(Kind::moebius, beta, mu, phi, std::nullopt);
}

DilatationSpec DilatationSpec::rotation(double mu, double phi) {
    return DilatationSpec(Kind::rotation, 0.0, mu, phi, std::nullopt);
}

DilatationSpec DilatationSpec::custom(TruncatedSeries coeffs) {
    const double beta = std::abs(coeffs[0]);
    require_beta(beta);
    // Maximum modulus sits on the outer circle; the interior rings are cheap.
    constexpr int kRadii = 32;
    constexpr int kAngles = 512;
    for (int i = 1; i <= kRadii; ++i) {
        const double r = 0.999 * i / kRadii;
        for (int j = 0; j < kAngles; ++j) {
            const double t = 2.0 * std::numbers::pi * j / kAngles;
            if (std::abs(evaluate(coeffs, std::polar(r, t))) >= 1.0) {
                throw std::invalid_argument("custom dilatation leaves the unit disk at |z| = " +
                                            std::to_string(r));
            }
        }
    }
    return DilatationSpec(Kind::custom, beta, std::arg(coeffs[0]), 0.0, std::move(coeffs));
}

Complex DilatationSpec::operator()(Complex z) const noexcept {
    switch (kind_) {
        case Kind::moebius: {
            const Complex rz = cis(phi_) * z;
            return cis(mu_) * (rz + beta_) / (1.0 + beta_ * rz);
        }
        case Kind::rotation:
            return cis(mu_ + phi_) * z;
        case Kind::custom:
            return evaluate(*series_, z);
    }
    return {};
}

const char* to_string(DilatationSpec::Kind kind) noexcept {
    switch (kind) {
        case DilatationSpec::Kind::moebius: return "moebius";
        case DilatationSpec::Kind::rotation: return "rotation";
        case DilatationSpec::Kind::custom: return "custom";
    }
    return "?";
}

TruncatedSeries dilatation_coeffs(const DilatationSpec& w, int order) {
    if (order < 0) {
        throw std::invalid_argument("dilatation order must be >= 0");
    }
    const auto n_terms = static_cast<std::size_t>(order) + 1;
    std::vector<Complex> c(n_terms);
    switch (w.kind()) {
        case DilatationSpec::Kind::moebius: {
            const double beta = w.beta();
            const Complex rot = cis(w.mu());
            c[0] = rot * beta;
            // c_n = e^{i mu} e^{i n phi} (1 - beta^2) (-beta)^{n-1}
            double mag = 1.0 - beta * beta;
            for (std::size_t n = 1; n < n_terms; ++n) {
                c[n] = rot * cis(static_cast<double>(n) * w.phi()) * mag;
                mag *= -beta;
            }
            break;
        }
        case DilatationSpec::Kind::rotation:
            if (n_terms > 1) {
                c[1] = cis(w.mu() + w.phi());
            }
            break;
        case DilatationSpec::Kind::custom:
            return w.custom_series()->truncated(n_terms - 1);
    }
    return TruncatedSeries(std::move(c));
}

std::size_t default_order(double beta) {
    constexpr std::size_t kBase = 64;
    if (beta <= 0.0) {
        return kBase;
    }
    const double needed = std::log(1e-12 * (1.0 - beta) / (1.0 - beta * beta)) / std::log(beta);
    return std::max(kBase, static_cast<std::size_t>(std::ceil(needed)));
}

TruncatedSeries co_analytic_from(const TruncatedSeries& h, const DilatationSpec& w, int order) {
    if (!h.is_normalized()) {
        throw std::invalid_argument("analytic part must satisfy a0 = 0, a1 = 1");
    }
    if (order < 1) {
        throw std::invalid_argument("co-analytic order must be >= 1");
    }
    const TruncatedSeries c = dilatation_coeffs(w, order - 1);
    const auto N = static_cast<std::size_t>(order);
    std::vector<Complex> b(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        Complex acc{};
        for (std::size_t k = 0; k < n && k + 1 <= h.order(); ++k) {
            acc += static_cast<double>(k + 1) * h[k + 1] * c[n - 1 - k];
        }
        b[n] = acc / static_cast<double>(n);
    }
    return TruncatedSeries(std::move(b));
}

HarmonicMapSpec::HarmonicMapSpec(TruncatedSeries h, DilatationSpec w)
    : h_(std::move(h)),
      w_(std::move(w)),
      g_(co_analytic_from(h_, w_, static_cast<int>(default_order(w_.beta()) + h_.order()))),
      hp_(differentiate(h_)) {}

Complex HarmonicMapSpec::value(Complex z) const noexcept {
    return evaluate(h_, z) + std::conj(evaluate(g_, z));
}

double jacobian_at(const HarmonicMapSpec& f, Complex z) noexcept {
    const double hp = std::norm(evaluate(f.h_prime(), z));
    const double w = std::norm(f.w()(z));
    return hp * (1.0 - w);
}

double lambda_at(const HarmonicMapSpec& f, Complex z) noexcept {
    return std::abs(evaluate(f.h_prime(), z)) * (1.0 + std::abs(f.w()(z)));
}

double lambda_sum_at(const HarmonicMapSpec& f, Complex z) noexcept {
    // g' is rebuilt on the fly; callers on hot paths use lambda_at.
    return std::abs(evaluate(f.h_prime(), z)) + std::abs(evaluate(differentiate(f.g()), z));
}

}  // namespace hcl
