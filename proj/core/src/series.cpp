#include "hcl/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcl {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs)
    : TruncatedSeries(std::vector<Complex>(coeffs)) {}

bool TruncatedSeries::is_normalized(double tol) const noexcept {
    return coeffs_.size() >= 2 && std::abs(coeffs_[0]) <= tol && std::abs(coeffs_[1] - 1.0) <= tol;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    std::vector<Complex> out(order + 1);
    std::copy_n(coeffs_.begin(), std::min(out.size(), coeffs_.size()), out.begin());
    return TruncatedSeries(std::move(out));
}

TruncatedSeries differentiate(const TruncatedSeries& s) {
    if (s.order() == 0) {
        return TruncatedSeries(0);
    }
    std::vector<Complex> out(s.order());
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = static_cast<double>(n + 1) * s[n + 1];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries integrate(const TruncatedSeries& s) {
    std::vector<Complex> out(s.order() + 2);
    for (std::size_t n = 1; n < out.size(); ++n) {
        out[n] = s[n - 1] / static_cast<double>(n);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t order) {
    std::vector<Complex> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Complex acc{};
        const std::size_t lo = n > b.order() ? n - b.order() : 0;
        const std::size_t hi = std::min(n, a.order());
        for (std::size_t k = lo; k <= hi; ++k) {
            acc += a[k] * b[n - k];
        }
        out[n] = acc;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries convex_combination(const TruncatedSeries& a, const TruncatedSeries& b, double lambda) {
    const std::size_t order = std::max(a.order(), b.order());
    std::vector<Complex> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        out[n] = lambda * a[n] + (1.0 - lambda) * b[n];
    }
    return TruncatedSeries(std::move(out));
}

Complex evaluate(const TruncatedSeries& s, Complex z) noexcept {
    const auto c = s.coeffs();
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

}  // namespace hcl
