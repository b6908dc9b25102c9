#include <benchmark/benchmark.h>

#include "nisg/bicyclic.hpp"
#include "nisg/fixtures.hpp"
#include "nisg/generators.hpp"
#include "nisg/metrics.hpp"
#include "nisg/norms.hpp"
#include "nisg/pairmap.hpp"
#include "nisg/random_instances.hpp"
#include "nisg/semigroup.hpp"

namespace {

using namespace nisg;

const NormFixture& fixture(const std::string& name) {
  for (const NormFixture& f : norm_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::runtime_error("no fixture " + name);
}

void BM_ValidateTable(benchmark::State& state) {
  const FiniteInverseSemigroup S = make_symmetric_inverse_monoid(3);
  for (auto _ : state) {
    auto v = FiniteInverseSemigroup::validate_table(S.size(), S.table(),
                                                    S.labels());
    benchmark::DoNotOptimize(v.semigroup);
  }
}
BENCHMARK(BM_ValidateTable);

void BM_SubmodularScan(benchmark::State& state) {
  const PairMap p = random_grid_ppm(17, false).map;
  for (auto _ : state) {
    bool ok = is_submodular_quiet(p);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_SubmodularScan);

void BM_InducedMetrics(benchmark::State& state) {
  const NormFixture& f = fixture("product-c3-chain3");
  for (auto _ : state) {
    InducedMetrics m = induced_metrics(f.S, f.v);
    benchmark::DoNotOptimize(m.d1);
  }
}
BENCHMARK(BM_InducedMetrics);

void BM_D2CoreInequality(benchmark::State& state) {
  const RandomGridInstance inst = random_grid_ppm(23, true);
  const PartialPseudoMetric p = *validate_ppm(inst.map).ppm;
  for (auto _ : state) {
    Report r = check_d2_core_inequality(p);
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_D2CoreInequality);

void BM_BicyclicSampling(benchmark::State& state) {
  const BicyclicMonoid M(2, GroupNorm::L1);
  for (auto _ : state) {
    Report r = verify_bicyclic_pseudonorm(M, 1, 512, 100);
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_BicyclicSampling);

}  // namespace

BENCHMARK_MAIN();
