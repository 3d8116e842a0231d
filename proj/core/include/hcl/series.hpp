#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hcl {

using Complex = std::complex<double>;

/// A power series on the unit disk truncated after z^order.
///
/// Index n holds the coefficient of z^n, so there are always order()+1
/// coefficients. Values are immutable after construction.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order = 0);
    explicit TruncatedSeries(std::vector<Complex> coeffs);
    TruncatedSeries(std::initializer_list<Complex> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^n; zero past the truncation order.
    Complex operator[](std::size_t n) const noexcept {
        return n < coeffs_.size() ? coeffs_[n] : Complex{};
    }

    /// True when coeff[0] = 0 and coeff[1] = 1 (to within `tol`).
    bool is_normalized(double tol = 1e-12) const noexcept;

    /// Copy keeping exactly `order`+1 coefficients (zero padded).
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

/// Term-by-term derivative; the order drops by one with a floor at 0.
TruncatedSeries differentiate(const TruncatedSeries& s);

/// Term-by-term antiderivative vanishing at 0; the order grows by one.
TruncatedSeries integrate(const TruncatedSeries& s);

/// Cauchy product of two series truncated at `order`.
TruncatedSeries cauchy_product(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t order);

/// Linear combination lambda*a + (1-lambda)*b, order = max of the two.
TruncatedSeries convex_combination(const TruncatedSeries& a, const TruncatedSeries& b, double lambda);

/// Horner evaluation of the truncated polynomial.
Complex evaluate(const TruncatedSeries& s, Complex z) noexcept;

}  // namespace hcl
