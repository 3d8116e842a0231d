#include <benchmark/benchmark.h>

#include "hcl/bounds.hpp"
#include "hcl/factory.hpp"
#include "hcl/verify.hpp"

namespace {

const hcl::ClassParams kParams(0.3, 0.5, 1.0);

void BM_CoefficientBound(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hcl::bn_bound(kParams, n));
}
BENCHMARK(BM_CoefficientBound)->Arg(2)->Arg(20)->Arg(200);

void BM_BlochBound(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hcl::bloch_bound(kParams));
}
BENCHMARK(BM_BlochBound);

void BM_AreaEnvelope(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hcl::area_envelope(kParams));
}
BENCHMARK(BM_AreaEnvelope);

void BM_GGrowthQuadrature(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hcl::g_growth_quadrature(kParams, 0.8));
}
BENCHMARK(BM_GGrowthQuadrature);

void BM_ReferenceBounds(benchmark::State& state) {
    const hcl::VerifyOptions options;
    for (auto _ : state) benchmark::DoNotOptimize(hcl::reference_bounds(kParams, options));
}
BENCHMARK(BM_ReferenceBounds)->Unit(benchmark::kMillisecond);

void BM_VerifyMember(benchmark::State& state) {
    const hcl::VerifyOptions options;
    const auto ref = hcl::reference_bounds(kParams, options);
    const auto f = hcl::sample_member(kParams, 7, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hcl::verify_member(f, ref, options));
}
BENCHMARK(BM_VerifyMember)->Arg(0)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
