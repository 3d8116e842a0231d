#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hcl/bounds.hpp"

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "hcl");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    hcl::cli::RunConfig config;
    Outcome o;
    if (auto code = hcl::cli::parse(static_cast<int>(argv.size()), argv.data(), config, out, err)) {
        o.code = *code;
    } else {
        o.code = hcl::cli::run(config, out, err);
    }
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> result;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

}  // namespace

TEST(Cli, FormatNumber) {
    EXPECT_EQ(hcl::cli::format_number(0.5), "0.5");
    EXPECT_EQ(hcl::cli::format_number(11.0 / 24.0), "0.458333333333333");
    EXPECT_EQ(hcl::cli::format_number(1e-10), "1e-10");
}

TEST(Cli, BoundsCsv) {
    const auto o = invoke({"bounds", "--alpha", "0", "--beta", "0", "--delta", "1", "--n-max", "5"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0], "theorem,alpha,beta,delta,n,bound");
    EXPECT_EQ(rows[1], "coeff,0,0,1,2,0.5");
    EXPECT_EQ(rows[2], "coeff,0,0,1,3,0.5");
    EXPECT_EQ(rows[3], "coeff,0,0,1,4,0.458333333333333");
    EXPECT_EQ(rows[4], "coeff,0,0,1,5," + hcl::cli::format_number(hcl::bn_bound(hcl::ClassParams(0, 0, 1), 5)));
}

TEST(Cli, BlochJson) {
    const auto o = invoke({"bloch", "--alpha", "0", "--beta", "0", "--delta", "1"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_NEAR(j.at("r0").get<double>(), 0.44300046816469139598, 1e-12);
    EXPECT_NEAR(j.at("bound").get<double>(), 1.41671120450017556, 1e-12);
    EXPECT_EQ(j.at("H").size(), 5u);
}

TEST(Cli, CoverCsvMatchesLibrary) {
    const auto o = invoke({"cover", "--alpha", "0.3", "--beta", "0.3", "--delta", "2"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 3u);
    const hcl::ClassParams p(0.3, 0.3, 2);
    EXPECT_EQ(rows[1], "covering,0.3,0.3,2," + hcl::cli::format_number(hcl::covering_radius(p)) + ",1e-10");
    EXPECT_EQ(rows[2], "normality,0.3,0.3,2," + hcl::cli::format_number(hcl::normality_constant(p)) + ",1e-10");
}

TEST(Cli, TableSweepsLattice) {
    const auto o = invoke({"table", "--alpha", "0", "--alpha", "0.5", "--beta", "0", "--beta", "0.3", "--delta", "1"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(lines(o.out).size(), 5u);
}

TEST(Cli, VerifyEmitsSevenRecordsPerMember) {
    const auto o = invoke({"verify", "--alpha", "0.3", "--beta", "0.5", "--delta", "1", "--members", "3", "--seed", "7"});
    EXPECT_TRUE(o.code == 0 || o.code == 1);
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 21u);
    bool any_failed = false;
    for (const auto& row : rows) {
        const auto j = nlohmann::json::parse(row);
        EXPECT_TRUE(j.contains("worst_margin"));
        any_failed = any_failed || !j.at("passed").get<bool>();
    }
    EXPECT_EQ(o.code, any_failed ? 1 : 0);
}

TEST(Cli, InvalidInputExitsTwo) {
    EXPECT_EQ(invoke({"bounds", "--alpha", "1.0"}).code, 2);
    EXPECT_EQ(invoke({"bounds", "--delta", "-1"}).code, 2);
    EXPECT_EQ(invoke({"growth", "--r", "1.0"}).code, 2);
    EXPECT_EQ(invoke({"bloch", "--alpha", "0", "--alpha", "0.5"}).code, 2);
    EXPECT_EQ(invoke({"bounds", "--tol", "0"}).code, 2);
    EXPECT_EQ(invoke({"nonsense"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, NonConvergenceExitsThree) {
    const auto o = invoke({"quad", "--poly", "-0.3", "1", "--abs", "--tol", "1e-300"});
    EXPECT_EQ(o.code, 3) << o.out << o.err;
}

TEST(Cli, HiddenDebugCommands) {
    auto o = invoke({"digamma", "1", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("-0.57721566490153"), std::string::npos);
    o = invoke({"quad", "--poly", "0.5", "-1", "--abs", "--breakpoints", "0.5"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("0.25"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args{"verify", "--alpha", "0.6", "--beta", "0.3", "--delta", "0", "--members", "4",
                                        "--seed", "99"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, invoke({"verify", "--alpha", "0.6", "--beta", "0.3", "--delta", "0", "--members", "4",
                             "--seed", "100"}).out);
}

TEST(Cli, EnvironmentToleranceAndFlagOverride) {
    ::setenv("HCL_TOL", "1e-7", 1);
    EXPECT_EQ(hcl::cli::default_tolerance(), 1e-7);
    auto o = invoke({"area"});
    EXPECT_NEAR(nlohmann::json::parse(o.out).at("tol").get<double>(), 1e-7, 0.0);
    o = invoke({"area", "--tol", "1e-9"});
    EXPECT_NEAR(nlohmann::json::parse(o.out).at("tol").get<double>(), 1e-9, 0.0);
    ::setenv("HCL_TOL", "garbage", 1);
    EXPECT_EQ(hcl::cli::default_tolerance(), 1e-10);
    ::unsetenv("HCL_TOL");
}

TEST(Cli, WritesToOutFile) {
    const auto path = std::filesystem::temp_directory_path() / "hcl_cli_test_out.csv";
    std::filesystem::remove(path);
    const auto o = invoke({"bounds", "--n-max", "3", "--out", path.string()});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(lines(content.str()).size(), 3u);
    std::filesystem::remove(path);
}

TEST(Cli, FormatOverride) {
    const auto o = invoke({"cover", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    for (const auto& row : lines(o.out)) EXPECT_TRUE(nlohmann::json::accept(row)) << row;
}
