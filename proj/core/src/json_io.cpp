#include "hcl/json_io.hpp"

#include <stdexcept>

namespace hcl {

using nlohmann::json;

json to_json(const TruncatedSeries& s) {
    json re = json::array();
    json im = json::array();
    for (const Complex& c : s.coeffs()) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    return json{{"order", s.order()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

TruncatedSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("re") || !j.contains("im")) {
        throw std::invalid_argument("series record needs order, re and im");
    }
    const auto order = j.at("order").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != order + 1 || im.size() != order + 1) {
        throw std::invalid_argument("series record: re/im must hold order+1 numbers");
    }
    std::vector<Complex> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        c[n] = {re[n].get<double>(), im[n].get<double>()};
    }
    return TruncatedSeries(std::move(c));
}

json to_json(const ClassParams& p) {
    return json{{"alpha", p.alpha()}, {"beta", p.beta()}, {"delta", p.delta()}};
}

ClassParams params_from_json(const json& j) {
    return ClassParams(j.at("alpha").get<double>(), j.at("beta").get<double>(),
                       j.at("delta").get<double>());
}

json sampled_member_to_json(const TruncatedSeries& h, const ClassParams& p, std::uint64_t seed) {
    json out = to_json(h);
    out["params"] = to_json(p);
    out["seed"] = seed;
    return out;
}

json to_json(const VerificationReport& r, const ClassParams& p, int member) {
    json out{{"member", member},
             {"theorem", to_string(r.theorem)},
             {"params", to_json(p)},
             {"passed", r.passed},
             {"worst_margin", r.worst_margin},
             {"witness", r.witness},
             {"slack", r.slack}};
    if (!r.note.empty()) {
        out["note"] = r.note;
    }
    return out;
}

json to_json(const BoundEnvelope& e, const ClassParams& p, double tol) {
    return json{{"params", to_json(p)}, {"lower", e.lower}, {"upper", e.upper}, {"at", e.at},
                {"tol", tol}};
}

json to_json(const BlochResult& b, const ClassParams& p, double tol) {
    return json{{"params", to_json(p)},
                {"r0", b.r0},
                {"bound", b.bound},
                {"H", b.H_coeffs},
                {"bracket", {b.bracket.first, b.bracket.second}},
                {"tol", tol}};
}

}  // namespace hcl
