#include "hcl/params.hpp"

#include <cmath>
#include <sstream>

namespace hcl {

ClassParams::ClassParams(double alpha, double beta, double delta)
    : alpha_(alpha), beta_(beta), delta_(delta) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1)");
    }
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw std::invalid_argument("beta must lie in [0, 1)");
    }
    if (!std::isfinite(delta)) {
        throw std::invalid_argument("delta must be finite");
    }
}

void ClassParams::require_nonnegative_delta() const {
    if (delta_ < 0.0) {
        throw std::invalid_argument("bounds require delta >= 0, got " + std::to_string(delta_));
    }
}

double ClassParams::kappa() const noexcept { return (2.0 - alpha_) * std::exp2(delta_ - 1.0); }

double ClassParams::slope() const noexcept { return (1.0 - alpha_) / kappa(); }

std::string ClassParams::to_string() const {
    std::ostringstream os;
    os << "(alpha=" << alpha_ << ", beta=" << beta_ << ", delta=" << delta_ << ")";
    return os.str();
}

}  // namespace hcl
