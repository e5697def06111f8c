#include "ltk/catalog.hpp"
#include "ltk/gamma.hpp"
#include "ltk/homology.hpp"
#include "ltk/lambda.hpp"
#include "ltk/transfer.hpp"

#include <benchmark/benchmark.h>

namespace {

const ltk::Catalog& catalog()
{
    static const ltk::Catalog c = ltk::Catalog::load(LTK_BENCH_CATALOG_DIR);
    return c;
}

// Cold normalization of every word lambda_a lambda_b lambda_c of degree n.
void BM_NormalizeCold(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ltk::clear_lambda_caches();
        std::size_t terms = 0;
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                terms += ltk::normalize(ltk::LambdaMonomial{a, b, n - a - b}).size();
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_NormalizeCold)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_DifferentialMatrix(benchmark::State& state)
{
    const int s = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        ltk::LambdaHomology h;
        benchmark::DoNotOptimize(h.ext_dimension(s, d));
    }
}
BENCHMARK(BM_DifferentialMatrix)->Args({5, 14})->Args({5, 20})->Args({5, 24})->Unit(benchmark::kMillisecond);

void BM_Psi(benchmark::State& state)
{
    const auto& u = catalog().at(state.range(0) == 0 ? "u14" : "u20").gamma();
    for (auto _ : state) {
        ltk::clear_transfer_caches();
        benchmark::DoNotOptimize(ltk::psi(u));
    }
}
BENCHMARK(BM_Psi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PrimitiveBasis(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ltk::primitive_basis(5, d));
}
BENCHMARK(BM_PrimitiveBasis)->Arg(9)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_VerifyDetection(benchmark::State& state)
{
    const auto& cls = ltk::detection_classes()[static_cast<std::size_t>(state.range(0))];
    const auto request = catalog().detection_request(cls);
    for (auto _ : state) {
        ltk::LambdaHomology h;
        benchmark::DoNotOptimize(ltk::verify_detection(request, h));
    }
}
BENCHMARK(BM_VerifyDetection)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
