#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hcl::cli {

enum class Command { bounds, table, verify, bloch, area, cover, growth, digamma, quad };
enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
    Command command = Command::bounds;
    // `table` sweeps every combination; the other commands take one value each.
    std::vector<double> alphas{0.0};
    std::vector<double> betas{0.0};
    std::vector<double> deltas{1.0};
    int n_max = 10;
    std::vector<double> r_grid;
    double tol = 1e-10;
    std::uint64_t seed = 1;
    int members = 100;
    std::optional<Format> format;
    std::optional<std::string> output;

    // Debug-only inputs of the hidden `digamma` and `quad` subcommands.
    std::vector<double> points;
    std::vector<double> poly;
    std::vector<double> breakpoints;
    double a = 0.0;
    double b = 1.0;
    bool absolute = false;
};

/// Parses argv. On failure (or --help) returns the exit code to use and
/// writes the message to `out`/`err`.
std::optional<int> parse(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                         std::ostream& err);

/// Executes a parsed config, writing records to `out` (or config.output).
/// Returns 0 on success, 1 if a verification failed, 2 for invalid input and
/// 3 for numerical non-convergence.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Default tolerance: HCL_TOL when set to a positive number, else 1e-10.
double default_tolerance();

/// Shortest locale-free rendering with 15 significant digits.
std::string format_number(double v);

}  // namespace hcl::cli
