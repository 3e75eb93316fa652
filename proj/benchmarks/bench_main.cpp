#include <benchmark/benchmark.h>

#include "ellipuc/circle_polys.hpp"
#include "ellipuc/elliptic_kernel.hpp"
#include "ellipuc/general_scheme.hpp"
#include "ellipuc/measures.hpp"
#include "ellipuc/polygon_finite.hpp"

using namespace ellipuc;

namespace {

void BM_Sncndn(benchmark::State& state) {
  const auto ctx = make_context(0.6);
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.sncndn(u));
    u += 1e-3;
  }
}
BENCHMARK(BM_Sncndn);

void BM_SzegoBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = reflection_cn(n + 1, 0.31, make_context(0.6));
  for (auto _ : state) benchmark::DoNotOptimize(szego_build_all(a, n));
}
BENCHMARK(BM_SzegoBuild)->Arg(20)->Arg(80);

void BM_LevinsonDouble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = moments_cn(n, 0.31, make_context(0.6));
  for (auto _ : state) benchmark::DoNotOptimize(levinson<double>(c.values, n));
}
BENCHMARK(BM_LevinsonDouble)->Arg(20);

void BM_LevinsonExtended(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ectx = ExtendedEllipticContext::from_modulus(Extended("0.6"));
  const auto c = moments_extended(Family::cn, n, Extended("0.31"), ectx);
  for (auto _ : state) benchmark::DoNotOptimize(levinson<Extended>(c, n));
}
BENCHMARK(BM_LevinsonExtended)->Arg(20);

void BM_GramCheck(benchmark::State& state) {
  const auto ctx = make_context(0.6);
  const auto m = cn_measure(0.31, ctx, 200);
  const auto polys = szego_build_all(reflection_cn(17, 0.31, ctx), 16);
  for (auto _ : state) benchmark::DoNotOptimize(gram_check(m, polys));
}
BENCHMARK(BM_GramCheck);

void BM_PolygonCase(benchmark::State& state) {
  const auto ctx = make_context(0.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_polygon_case(static_cast<int>(state.range(0)), ctx));
  }
}
BENCHMARK(BM_PolygonCase)->Arg(5);

void BM_MagnusSparsity(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(magnus_sparsity_check("0.61803398874989484820458683436563811772", 50));
  }
}
BENCHMARK(BM_MagnusSparsity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
