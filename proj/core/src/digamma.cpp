#include <array>
#include <cmath>
#include <stdexcept>

#include "hcl/numerics.hpp"

namespace hcl {

double digamma(double x) {
    if (!(x > 0.0)) {
        throw std::invalid_argument("digamma is only defined here for x > 0");
    }
    // Shift up with psi(x + 1) = psi(x) + 1/x.
    double shift = 0.0;
    while (x < 8.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
    constexpr std::array<double, 7> kTerms = {
        1.0 / 12.0,   -1.0 / 120.0, 1.0 / 252.0,      -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    const double inv2 = 1.0 / (x * x);
    double series = 0.0;
    for (auto it = kTerms.rbegin(); it != kTerms.rend(); ++it) {
        series = (series + *it) * inv2;
    }
    return shift + std::log(x) - 0.5 / x - series;
}

}  // namespace hcl
