#include <benchmark/benchmark.h>

#include <random>

#include "gcover/verify.hpp"
#include "support.hpp"

using namespace gcover;
using namespace gcover::testing;

namespace {

Problem fixture(int k)
{
    switch (k) {
    case 1: return ex1();
    case 2: return ex2();
    case 3: return ex3();
    case 4: return ex4();
    default: return ex5();
    }
}

void BM_CanonicalCover(benchmark::State& st)
{
    auto p = fixture(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(canonical_cover(p.ctx, p.I));
}
BENCHMARK(BM_CanonicalCover)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_SingularIdeal(benchmark::State& st)
{
    auto p = fixture(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(singular_ideal(*p.ctx, p.I, {}));
}
BENCHMARK(BM_SingularIdeal)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_VerifyCover(benchmark::State& st)
{
    auto p = fixture(static_cast<int>(st.range(0)));
    auto cv = canonical_cover(p.ctx, p.I);
    auto L = ConstructibleSet::whole(p.ctx->u);
    for (auto _ : st) benchmark::DoNotOptimize(verify_cover(*p.ctx, p.I, cv.strata, L));
}
BENCHMARK(BM_VerifyCover)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_GroebnerSpecialized(benchmark::State& st)
{
    auto p = ex5();
    std::vector<Rational> pt{2, 3, 5, 7, 11, 13};
    for (auto _ : st) benchmark::DoNotOptimize(groebner(specialize(*p.ctx, p.I, pt), p.ctx->x));
}
BENCHMARK(BM_GroebnerSpecialized)->Unit(benchmark::kMicrosecond);

void BM_GenericLinearSystem(benchmark::State& st)
{
    auto p = problem({"a", "b", "c", "d"}, {"x", "y"}, {"a*x+b*y-1", "c*x+d*y"});
    for (auto _ : st) benchmark::DoNotOptimize(canonical_cover(p.ctx, p.I));
}
BENCHMARK(BM_GenericLinearSystem)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
