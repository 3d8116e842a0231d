#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hcl/numerics.hpp"
#include "hcl/params.hpp"

namespace hcl {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    degree_ = static_cast<int>(coeffs_.size()) - 1;
    while (degree_ >= 0 && coeffs_[static_cast<std::size_t>(degree_)] == 0.0) {
        --degree_;
    }
}

double Polynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (int i = degree_; i >= 0; --i) {
        acc = acc * x + coeffs_[static_cast<std::size_t>(i)];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree_ <= 0) {
        return Polynomial({0.0});
    }
    std::vector<double> out(static_cast<std::size_t>(degree_));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(degree_); ++i) {
        out[i - 1] = static_cast<double>(i) * coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial({0.0});
    }
    std::vector<double> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1, 0.0);
    for (int i = 0; i <= a.degree(); ++i) {
        for (int j = 0; j <= b.degree(); ++j) {
            out[static_cast<std::size_t>(i + j)] +=
                a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
    std::vector<double> out(std::max<std::size_t>(n, 1), 0.0);
    for (int i = 0; i <= a.degree(); ++i) out[static_cast<std::size_t>(i)] += a.coeffs_[static_cast<std::size_t>(i)];
    for (int i = 0; i <= b.degree(); ++i) out[static_cast<std::size_t>(i)] += b.coeffs_[static_cast<std::size_t>(i)];
    return Polynomial(std::move(out));
}

int sign_variations(const Polynomial& p) {
    int count = 0;
    int last = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        const double c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0.0) {
            continue;
        }
        const int s = c > 0.0 ? 1 : -1;
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

int vincent_variation_count(const Polynomial& p, double a, double b) {
    if (!(a >= 0.0 && a < b)) {
        throw std::invalid_argument("vincent_variation_count requires 0 <= a < b");
    }
    if (p.is_zero()) {
        return 0;
    }
    // V(x) = sum_k p_k (a + b x)^k (1 + x)^(n - k), expanded exactly.
    const int n = p.degree();
    const Polynomial num({a, b});
    const Polynomial den({1.0, 1.0});
    std::vector<Polynomial> num_pow{Polynomial({1.0})};
    std::vector<Polynomial> den_pow{Polynomial({1.0})};
    for (int k = 1; k <= n; ++k) {
        num_pow.push_back(num_pow.back() * num);
        den_pow.push_back(den_pow.back() * den);
    }
    Polynomial v({0.0});
    for (int k = 0; k <= n; ++k) {
        const double pk = p.coeffs()[static_cast<std::size_t>(k)];
        if (pk != 0.0) {
            v = v + Polynomial({pk}) * num_pow[static_cast<std::size_t>(k)] *
                        den_pow[static_cast<std::size_t>(n - k)];
        }
    }
    return sign_variations(v);
}

std::pair<double, double> bisection_bracket(const Polynomial& p, double a, double b, double tol) {
    if (!(a < b)) {
        throw std::invalid_argument("bisection requires a < b");
    }
    double fa = p(a);
    const double fb = p(b);
    if (fa == 0.0) return {a, a};
    if (fb == 0.0) return {b, b};
    if (fa * fb > 0.0) {
        throw std::invalid_argument("bisection endpoints do not bracket a sign change");
    }
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) {
            break;
        }
        const double fm = p(mid);
        if (fm == 0.0) {
            return {mid, mid};
        }
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return {a, b};
}

double isolate_root(const Polynomial& p, double a, double b, double tol) {
    const auto [lo, hi] = bisection_bracket(p, a, b, tol);
    return 0.5 * (lo + hi);
}

namespace {

void subdivide(const Polynomial& p, double lo, double hi, int depth, int max_depth,
               std::vector<RootInterval>& out) {
    const int count = vincent_variation_count(p, lo, hi);
    if (count == 0) {
        return;
    }
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    if (depth >= max_depth) {
        throw NumericalError("root isolation did not separate roots near " + std::to_string(lo));
    }
    const double mid = 0.5 * (lo + hi);
    subdivide(p, lo, mid, depth + 1, max_depth, out);
    if (p(mid) == 0.0) {
        out.push_back({mid, mid});
    }
    subdivide(p, mid, hi, depth + 1, max_depth, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, double a, double b, int max_depth) {
    std::vector<RootInterval> out;
    if (!p.is_zero()) {
        subdivide(p, a, b, 0, max_depth, out);
    }
    return out;
}

}  // namespace hcl
