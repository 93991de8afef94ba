#include <benchmark/benchmark.h>

#include "wiman/elliptic.hpp"
#include "wiman/wiman_curve.hpp"

using namespace wiman;

static void BM_FieldMul(benchmark::State& state) {
  Field f = Field::gf(19, 2);
  Rng rng(1);
  Fe a = f.sample(rng), b = f.sample(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_FieldMul);

static void BM_FactorDeg8(benchmark::State& state) {
  Field f = Field::gf(19);
  Rng rng(2);
  std::vector<Fe> c;
  for (int i = 0; i <= 8; ++i) c.push_back(f.sample(rng));
  Poly p(f, c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_univariate(p));
  }
}
BENCHMARK(BM_FactorDeg8);

static void BM_PlaceCensus19(benchmark::State& state) {
  PlaneCurve C = wiman_curve(19);
  Field K = Field::gf(19, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_places_deg1(C, K).total);
  }
}
BENCHMARK(BM_PlaceCensus19)->Unit(benchmark::kMillisecond);

static void BM_Closure120(benchmark::State& state) {
  PlaneCurve C = wiman_curve(19);
  auto gens = wiman_generators(19);
  PlaceSet ps = build_places(C, Field::gf(19, 2), gens);
  std::vector<Perm> perms;
  for (const auto& m : gens) perms.push_back(map_to_permutation(m, ps));
  for (auto _ : state) {
    benchmark::DoNotOptimize(close_generators(perms).order);
  }
}
BENCHMARK(BM_Closure120)->Unit(benchmark::kMillisecond);

static void BM_TraceScanTo500(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_primes(7, 500).size());
  }
}
BENCHMARK(BM_TraceScanTo500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
