#pragma once

#include <optional>

#include "hcl/series.hpp"

namespace hcl {

/// The dilatation w = g'/h' of a sense-preserving harmonic map, |w| < 1.
///
/// Three families are modelled:
///  - moebius:  w(z) = e^{i mu} (e^{i phi} z + beta) / (1 + beta e^{i phi} z)
///  - rotation: w(z) = e^{i (mu + phi)} z (the beta = 0 Schwarz case)
///  - custom:   an explicit polynomial with |w(0)| = beta, checked to stay
///              inside the unit disk on |z| <= 0.999.
class DilatationSpec {
public:
    enum class Kind { moebius, rotation, custom };

    static DilatationSpec moebius(double beta, double mu, double phi);
    static DilatationSpec rotation(double mu, double phi);
    static DilatationSpec custom(TruncatedSeries coeffs);

    Kind kind() const noexcept { return kind_; }
    double beta() const noexcept { return beta_; }
    double mu() const noexcept { return mu_; }
    double phi() const noexcept { return phi_; }
    /// The polynomial of a custom dilatation, empty otherwise.
    const std::optional<TruncatedSeries>& custom_series() const noexcept { return series_; }

    /// Closed-form value (Horner for the custom kind).
    Complex operator()(Complex z) const noexcept;

private:
    DilatationSpec(Kind kind, double beta, double mu, double phi, std::optional<TruncatedSeries> s)
        : kind_(kind), beta_(beta), mu_(mu), phi_(phi), series_(std::move(s)) {}

    Kind kind_;
    double beta_;
    double mu_;
    double phi_;
    std::optional<TruncatedSeries> series_;
};

const char* to_string(DilatationSpec::Kind kind) noexcept;

/// Taylor coefficients c_0..c_order of w. Rejects order < 0.
TruncatedSeries dilatation_coeffs(const DilatationSpec& w, int order);

/// Truncation order for the series of a map with |w(0)| = beta: at least 64,
/// raised so the Moebius coefficient tail stays below 1e-12.
std::size_t default_order(double beta);

/// Coefficients of g from g' = w h':
///   n b_n = sum_{k=0}^{n-1} (k+1) a_{k+1} c_{n-1-k},  b_0 = 0.
/// Rejects a non-normalized h and order < 1.
TruncatedSeries co_analytic_from(const TruncatedSeries& h, const DilatationSpec& w, int order);

/// f = h + conj(g) with g derived from (h, w). Immutable once built.
class HarmonicMapSpec {
public:
    /// Derives g at default_order(w.beta()) + h.order().
    HarmonicMapSpec(TruncatedSeries h, DilatationSpec w);

    const TruncatedSeries& h() const noexcept { return h_; }
    const DilatationSpec& w() const noexcept { return w_; }
    const TruncatedSeries& g() const noexcept { return g_; }
    const TruncatedSeries& h_prime() const noexcept { return hp_; }

    /// f(z) = h(z) + conj(g(z)) from the truncated series.
    Complex value(Complex z) const noexcept;

private:
    TruncatedSeries h_;
    DilatationSpec w_;
    TruncatedSeries g_;
    TruncatedSeries hp_;
};

/// J_f(z) = |h'(z)|^2 (1 - |w(z)|^2), with w from its closed form.
double jacobian_at(const HarmonicMapSpec& f, Complex z) noexcept;

/// |h'(z)| + |g'(z)| written as |h'(z)| (1 + |w(z)|).
double lambda_at(const HarmonicMapSpec& f, Complex z) noexcept;

/// |h'(z)| + |g'(z)| with g' taken from the derived g series.
double lambda_sum_at(const HarmonicMapSpec& f, Complex z) noexcept;

}  // namespace hcl
