#include <benchmark/benchmark.h>

#include "subshift/certify.hpp"
#include "subshift/construct.hpp"
#include "subshift/generators.hpp"
#include "subshift/rauzy.hpp"

using namespace subshift;

namespace {

void BM_GenerateSturmian(benchmark::State& state) {
    const GeneratorSpec g = fibonacci_spec(24);
    for (auto _ : state) benchmark::DoNotOptimize(generate(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GenerateSturmian)->Arg(16)->Arg(64)->Arg(256);

void BM_GenerateGoldenSft(benchmark::State& state) {
    const GeneratorSpec g = golden_mean_spec();
    for (auto _ : state) benchmark::DoNotOptimize(generate(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GenerateGoldenSft)->Arg(8)->Arg(12)->Arg(16);

void BM_BuildRauzy(benchmark::State& state) {
    const TruncatedLanguage L = generate(full_shift_spec(2), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_rauzy(L));
}
BENCHMARK(BM_BuildRauzy)->Arg(6)->Arg(10)->Arg(14);

void BM_ClassifyOmc(benchmark::State& state) {
    const RauzyGraph G = build_rauzy(generate(chacon_spec(), static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(classify_omc(G));
}
BENCHMARK(BM_ClassifyOmc)->Arg(8)->Arg(32)->Arg(128);

void BM_ComplexityTable(benchmark::State& state) {
    const GeneratorSpec g = chacon_spec();
    for (auto _ : state) benchmark::DoNotOptimize(complexity_table(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ComplexityTable)->Arg(20)->Arg(80);

void BM_TransitivityCertificate(benchmark::State& state) {
    const GeneratorSpec g = golden_mean_spec();
    for (auto _ : state) benchmark::DoNotOptimize(transitivity_certificate(g, 2, 12));
}
BENCHMARK(BM_TransitivityCertificate);

void BM_ToeplitzCertificate(benchmark::State& state) {
    const GeneratorSpec g = period_doubling_spec();
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz_certificate(g, Rational(1, 4), 33, 8));
}
BENCHMARK(BM_ToeplitzCertificate);

void BM_Decipherability(benchmark::State& state) {
    const Tau tau = letword_tau(generate(golden_mean_spec(), static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(certify_decipherability(tau));
}
BENCHMARK(BM_Decipherability)->Arg(2)->Arg(3)->Arg(4);

void BM_DenseNmc(benchmark::State& state) {
    const TruncatedLanguage L = generate(golden_mean_spec(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dense_nmc(L));
}
BENCHMARK(BM_DenseNmc)->Arg(3)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
