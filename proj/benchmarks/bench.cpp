#include <benchmark/benchmark.h>

#include "crsym/catalog.hpp"
#include "crsym/parse.hpp"
#include "crsym/tangency.hpp"

using namespace crsym;

namespace {

void BM_PolyMul(benchmark::State& state) {
  MixedPoly p = parse_polynomial("(z1*Z1 + z2*Z2 + Re(Z1*z2^2))^2");
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyMul);

void BM_SolveWeightZero(benchmark::State& state) {
  MixedPoly p = parse_polynomial("Re(Z1*z2^2)");
  Weight lam = infer_multitype_weights(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_weight(p, lam, Rat(0)));
}
BENCHMARK(BM_SolveWeightZero);

void BM_FullAlgebraTube(benchmark::State& state) {
  MixedPoly p = parse_polynomial("Re(Z1*z2^2)");
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_symmetry_algebra(p, 1));
}
BENCHMARK(BM_FullAlgebraTube);

void BM_FullAlgebraQuadricSquared(benchmark::State& state) {
  MixedPoly p = parse_polynomial("(z1*Z1 + z2*Z2)^2");
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_symmetry_algebra(p, 1));
}
BENCHMARK(BM_FullAlgebraQuadricSquared);

void BM_BuildCatalogDefaults(benchmark::State& state) {
  for (auto _ : state)
    for (const ModelSpec& s : default_specs())
      benchmark::DoNotOptimize(build_model(s));
}
BENCHMARK(BM_BuildCatalogDefaults);

}  // namespace

BENCHMARK_MAIN();
