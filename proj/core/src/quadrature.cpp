#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "hcl/numerics.hpp"
#include "hcl/params.hpp"

namespace hcl {
namespace {

// Kronrod abscissae in descending order; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double result;
    double error;
    int depth;

    bool operator<(const Panel& other) const noexcept { return error < other.error; }
};

Panel gk15(const RealFunction& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * sum;
        }
    }
    kronrod *= half;
    gauss *= half;
    if (!std::isfinite(kronrod)) {
        throw ConvergenceError("integrand is not finite on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
    }
    return Panel{a, b, kronrod, std::abs(kronrod - gauss), depth};
}

}  // namespace

double adaptive_quadrature(const RealFunction& f, double a, double b, double tol,
                           std::span<const double> breakpoints, QuadratureOptions options) {
    if (!(a <= b)) {
        throw std::invalid_argument("quadrature requires a <= b");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("quadrature tolerance must be positive");
    }
    if (a == b) {
        return 0.0;
    }

    std::vector<double> cuts{a};
    for (double x : breakpoints) {
        if (x > a && x < b) {
            cuts.push_back(x);
        }
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<Panel> panels;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = gk15(f, cuts[i], cuts[i + 1], 0);
        total_error += p.error;
        panels.push(p);
    }

    while (total_error > tol) {
        Panel worst = panels.top();
        if (worst.depth >= options.max_depth ||
            static_cast<int>(panels.size()) >= options.max_panels) {
            throw ConvergenceError("adaptive quadrature did not converge near [" +
                                   std::to_string(worst.a) + ", " + std::to_string(worst.b) +
                                   "], error estimate " + std::to_string(total_error));
        }
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(f, worst.a, mid, worst.depth + 1);
        Panel right = gk15(f, mid, worst.b, worst.depth + 1);
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum from scratch so the result does not depend on update order.
    std::vector<Panel> done;
    done.reserve(panels.size());
    while (!panels.empty()) {
        done.push_back(panels.top());
        panels.pop();
    }
    std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double sum = 0.0;
    for (const auto& p : done) {
        sum += p.result;
    }
    return sum;
}

}  // namespace hcl
