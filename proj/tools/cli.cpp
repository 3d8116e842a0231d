#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>

#include "hcl/bounds.hpp"
#include "hcl/factory.hpp"
#include "hcl/json_io.hpp"
#include "hcl/numerics.hpp"
#include "hcl/verify.hpp"

namespace hcl::cli {
namespace {

using Cell = std::variant<double, long long, bool, std::string>;

/// One emitted row: CSV renders `cells` under `columns`; JSON renders `json`.
struct Record {
    std::vector<Cell> cells;
    nlohmann::json json;
};

struct Sheet {
    std::vector<std::string> columns;
    std::vector<Record> records;
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(v);
            } else {
                return csv_escape(v);
            }
        },
        cell);
}

void emit(const Sheet& sheet, Format format, std::ostream& out) {
    if (format == Format::csv) {
        for (std::size_t i = 0; i < sheet.columns.size(); ++i) {
            out << (i ? "," : "") << sheet.columns[i];
        }
        out << '\n';
        for (const auto& rec : sheet.records) {
            for (std::size_t i = 0; i < rec.cells.size(); ++i) {
                out << (i ? "," : "") << render(rec.cells[i]);
            }
            out << '\n';
        }
        return;
    }
    for (const auto& rec : sheet.records) {
        out << rec.json.dump() << '\n';
    }
}

std::vector<Cell> param_cells(const char* theorem, const ClassParams& p) {
    return {std::string(theorem), p.alpha(), p.beta(), p.delta()};
}

std::vector<std::string> param_columns(std::initializer_list<const char*> rest) {
    std::vector<std::string> cols{"theorem", "alpha", "beta", "delta"};
    cols.insert(cols.end(), rest.begin(), rest.end());
    return cols;
}

ClassParams single_params(const RunConfig& c) {
    if (c.alphas.size() != 1 || c.betas.size() != 1 || c.deltas.size() != 1) {
        throw std::invalid_argument("only the table command accepts several alpha/beta/delta values");
    }
    return ClassParams(c.alphas.front(), c.betas.front(), c.deltas.front());
}

nlohmann::json base_json(const char* theorem, const ClassParams& p) {
    return nlohmann::json{{"theorem", theorem}, {"params", to_json(p)}};
}

Sheet cmd_bounds(const RunConfig& c) {
    const ClassParams p = single_params(c);
    if (c.n_max < 2) {
        throw std::invalid_argument("--n-max must be >= 2");
    }
    Sheet s{param_columns({"n", "bound"}), {}};
    for (int n = 2; n <= c.n_max; ++n) {
        const double v = bn_bound(p, n);
        auto cells = param_cells("coeff", p);
        cells.insert(cells.end(), {static_cast<long long>(n), v});
        auto j = base_json("coeff", p);
        j["n"] = n;
        j["value"] = v;
        s.records.push_back({std::move(cells), std::move(j)});
    }
    return s;
}

Sheet cmd_bloch(const RunConfig& c) {
    const ClassParams p = single_params(c);
    const BlochResult b = bloch_bound(p);
    Sheet s{param_columns({"r0", "bound", "H0", "H1", "H2", "H3", "H4", "bracket_lo", "bracket_hi"}), {}};
    auto cells = param_cells("bloch", p);
    cells.insert(cells.end(), {b.r0, b.bound});
    for (double h : b.H_coeffs) cells.emplace_back(h);
    cells.insert(cells.end(), {b.bracket.first, b.bracket.second});
    auto j = to_json(b, p, 0.0);
    j["theorem"] = "bloch";
    j.erase("tol");
    s.records.push_back({std::move(cells), std::move(j)});
    return s;
}

Sheet cmd_area(const RunConfig& c) {
    const ClassParams p = single_params(c);
    const BoundEnvelope e = area_envelope(p, c.tol);
    Sheet s{param_columns({"lower", "upper", "tol"}), {}};
    auto cells = param_cells("area", p);
    cells.insert(cells.end(), {e.lower, e.upper, c.tol});
    auto j = to_json(e, p, c.tol);
    j["theorem"] = "area";
    j.erase("at");
    s.records.push_back({std::move(cells), std::move(j)});
    return s;
}

Sheet cmd_cover(const RunConfig& c) {
    const ClassParams p = single_params(c);
    Sheet s{param_columns({"value", "tol"}), {}};
    const std::pair<const char*, double> rows[] = {
        {"covering", covering_radius(p, c.tol)},
        {"normality", normality_constant(p, c.tol)},
    };
    for (const auto& [name, v] : rows) {
        auto cells = param_cells(name, p);
        cells.insert(cells.end(), {v, c.tol});
        auto j = base_json(name, p);
        j["value"] = v;
        j["tol"] = c.tol;
        s.records.push_back({std::move(cells), std::move(j)});
    }
    return s;
}

Sheet cmd_growth(const RunConfig& c) {
    const ClassParams p = single_params(c);
    std::vector<double> radii = c.r_grid;
    if (radii.empty()) {
        for (int i = 0; i < 10; ++i) radii.push_back(0.1 * i);
    }
    Sheet s{param_columns({"r", "hprime_lower", "hprime_upper", "dilatation_lower",
                           "dilatation_upper", "gprime_lower", "gprime_upper", "g_lower", "g_upper",
                           "f_lower", "f_upper", "tol"}),
            {}};
    for (double r : radii) {
        const auto hp = hprime_envelope(p, r);
        const auto w = dilatation_envelope(p.beta(), r);
        const auto gp = gprime_envelope(p, r);
        const auto g = g_growth_bounds(p, r, c.tol);
        const auto f = f_growth(p, r, c.tol);
        auto cells = param_cells("growth", p);
        cells.insert(cells.end(), {r, hp.lower, hp.upper, w.lower, w.upper, gp.lower, gp.upper,
                                   g.lower, g.upper, f.lower, f.upper, c.tol});
        auto j = base_json("growth", p);
        j["r"] = r;
        j["hprime"] = {hp.lower, hp.upper};
        j["dilatation"] = {w.lower, w.upper};
        j["gprime"] = {gp.lower, gp.upper};
        j["g"] = {g.lower, g.upper};
        j["f"] = {f.lower, f.upper};
        j["tol"] = c.tol;
        s.records.push_back({std::move(cells), std::move(j)});
    }
    return s;
}

Sheet cmd_table(const RunConfig& c) {
    Sheet s{param_columns({"b2_bound", "b3_bound", "area_lower", "area_upper", "covering_radius",
                           "normality_constant", "bloch_r0", "bloch_bound", "tol"}),
            {}};
    for (double alpha : c.alphas) {
        for (double beta : c.betas) {
            for (double delta : c.deltas) {
                const ClassParams p(alpha, beta, delta);
                const auto area = area_envelope(p, c.tol);
                const double k = covering_radius(p, c.tol);
                const double m = normality_constant(p, c.tol);
                const auto b = bloch_bound(p);
                const double b2 = bn_bound(p, 2);
                const double b3 = bn_bound(p, 3);
                auto cells = param_cells("table", p);
                cells.insert(cells.end(), {b2, b3, area.lower, area.upper, k, m, b.r0, b.bound, c.tol});
                auto j = base_json("table", p);
                j["b2_bound"] = b2;
                j["b3_bound"] = b3;
                j["area"] = {area.lower, area.upper};
                j["covering_radius"] = k;
                j["normality_constant"] = m;
                j["bloch"] = {{"r0", b.r0}, {"bound", b.bound}};
                j["tol"] = c.tol;
                s.records.push_back({std::move(cells), std::move(j)});
            }
        }
    }
    return s;
}

Sheet cmd_verify(const RunConfig& c, bool& all_passed) {
    const ClassParams p = single_params(c);
    if (c.members < 1) {
        throw std::invalid_argument("--members must be >= 1");
    }
    VerifyOptions options;
    options.tol = c.tol;
    options.n_max = std::max(2, c.n_max);
    const ReferenceBounds ref = reference_bounds(p, options);

    Sheet s{param_columns({"member", "passed", "worst_margin", "slack", "note", "witness"}), {}};
    all_passed = true;
    for (int i = 0; i < c.members; ++i) {
        const auto f = sample_member(p, c.seed, static_cast<std::uint64_t>(i));
        for (const auto& r : verify_member(f, ref, options)) {
            all_passed = all_passed && r.passed;
            auto cells = param_cells(to_string(r.theorem), p);
            cells.insert(cells.end(), {static_cast<long long>(i), r.passed, r.worst_margin, r.slack,
                                       r.note, r.witness});
            s.records.push_back({std::move(cells), to_json(r, p, i)});
        }
    }
    return s;
}

Sheet cmd_digamma(const RunConfig& c) {
    Sheet s{{"x", "digamma"}, {}};
    for (double x : c.points) {
        const double v = digamma(x);
        s.records.push_back({{x, v}, nlohmann::json{{"x", x}, {"digamma", v}}});
    }
    return s;
}

Sheet cmd_quad(const RunConfig& c) {
    const Polynomial p(c.poly);
    const bool absolute = c.absolute;
    const double v = adaptive_quadrature(
        [&](double x) { return absolute ? std::abs(p(x)) : p(x); }, c.a, c.b, c.tol, c.breakpoints);
    Sheet s{{"a", "b", "value", "tol"}, {}};
    s.records.push_back({{c.a, c.b, v, c.tol},
                         nlohmann::json{{"a", c.a}, {"b", c.b}, {"value", v}, {"tol", c.tol}}});
    return s;
}

Format default_format(Command cmd) {
    switch (cmd) {
        case Command::verify:
        case Command::bloch:
        case Command::area:
            return Format::json;
        default:
            return Format::csv;
    }
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

double default_tolerance() {
    if (const char* env = std::getenv("HCL_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) {
            return v;
        }
    }
    return kDefaultQuadTol;
}

std::optional<int> parse(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                         std::ostream& err) {
    CLI::App app{"Bounds and verification for the harmonic class S_H^delta[alpha, beta]", "hcl"};
    app.require_subcommand(1, 1);
    config.tol = default_tolerance();

    auto add_common = [&](CLI::App* sub, bool multi) {
        auto* a = sub->add_option("--alpha", config.alphas, "order parameter alpha in [0,1)");
        auto* b = sub->add_option("--beta", config.betas, "|g'(0)| = beta in [0,1)");
        auto* d = sub->add_option("--delta", config.deltas, "class exponent delta >= 0");
        if (!multi) {
            a->expected(1);
            b->expected(1);
            d->expected(1);
        }
        sub->add_option("--tol", config.tol, "absolute quadrature tolerance (env HCL_TOL)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", config.format, "output format")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
        sub->add_option("--out", config.output, "write records to this file instead of stdout");
    };

    struct Entry {
        const char* name;
        const char* help;
        Command cmd;
    };
    const Entry entries[] = {
        {"bounds", "coefficient bounds |b_n| for n = 2..n-max", Command::bounds},
        {"table", "summary bounds over an (alpha, beta, delta) lattice", Command::table},
        {"verify", "sample members and verify every bound on them", Command::verify},
        {"bloch", "Bloch constant bound and its quartic root", Command::bloch},
        {"area", "area envelope", Command::area},
        {"cover", "covering radius and normality constant", Command::cover},
        {"growth", "distortion and growth envelopes over a radius grid", Command::growth},
        {"digamma", "debug: digamma values (unstable)", Command::digamma},
        {"quad", "debug: adaptive quadrature of a polynomial (unstable)", Command::quad},
    };
    std::map<CLI::App*, Command> lookup;
    for (const auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        lookup[sub] = e.cmd;
        switch (e.cmd) {
            case Command::digamma:
                sub->group("");
                sub->add_option("x", config.points, "arguments")->required();
                sub->add_option("--format", config.format)->transform(CLI::CheckedTransformer(
                    std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
                continue;
            case Command::quad:
                sub->group("");
                sub->add_option("--poly", config.poly, "ascending coefficients")->required();
                sub->add_option("--a", config.a);
                sub->add_option("--b", config.b);
                sub->add_option("--breakpoints", config.breakpoints);
                sub->add_flag("--abs", config.absolute, "integrate |p(x)|");
                sub->add_option("--tol", config.tol)->check(CLI::PositiveNumber);
                sub->add_option("--format", config.format)->transform(CLI::CheckedTransformer(
                    std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
                continue;
            default:
                break;
        }
        add_common(sub, e.cmd == Command::table);
        if (e.cmd == Command::bounds || e.cmd == Command::verify) {
            sub->add_option("--n-max", config.n_max, "largest coefficient index");
        }
        if (e.cmd == Command::growth) {
            sub->add_option("--r", config.r_grid, "radii in [0,1)");
        }
        if (e.cmd == Command::verify) {
            sub->add_option("--seed", config.seed, "base seed for member sampling");
            sub->add_option("--members", config.members, "number of sampled members");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    for (const auto& [sub, cmd] : lookup) {
        if (sub->parsed()) {
            config.command = cmd;
        }
    }
    return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    bool all_passed = true;
    Sheet sheet;
    try {
        if (!(config.tol > 0.0)) {
            throw std::invalid_argument("--tol must be positive");
        }
        for (double r : config.r_grid) {
            if (!(r >= 0.0 && r < 1.0)) {
                throw std::invalid_argument("--r values must lie in [0, 1)");
            }
        }
        switch (config.command) {
            case Command::bounds: sheet = cmd_bounds(config); break;
            case Command::table: sheet = cmd_table(config); break;
            case Command::verify: sheet = cmd_verify(config, all_passed); break;
            case Command::bloch: sheet = cmd_bloch(config); break;
            case Command::area: sheet = cmd_area(config); break;
            case Command::cover: sheet = cmd_cover(config); break;
            case Command::growth: sheet = cmd_growth(config); break;
            case Command::digamma: sheet = cmd_digamma(config); break;
            case Command::quad: sheet = cmd_quad(config); break;
        }
    } catch (const std::invalid_argument& e) {
        err << "hcl: invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "hcl: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }

    const Format format = config.format.value_or(default_format(config.command));
    if (config.output) {
        std::ofstream file(*config.output);
        if (!file) {
            err << "hcl: cannot open " << *config.output << '\n';
            return kExitUsage;
        }
        emit(sheet, format, file);
    } else {
        emit(sheet, format, out);
    }
    return all_passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace hcl::cli
