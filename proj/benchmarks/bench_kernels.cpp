#include <benchmark/benchmark.h>

#include "segre/groebner.hpp"
#include "segre/hilbert.hpp"
#include "segre/ideal_io.hpp"
#include "segre/segre.hpp"

namespace {

segre::Ideal rnc(std::int64_t k) { return segre::load_ideal(segre::generate_example("rnc", {k})); }

void BM_BuchbergerRationalNormalCurve(benchmark::State& state) {
  const segre::Ideal ideal = rnc(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(segre::groebner_basis(ideal));
}
BENCHMARK(BM_BuchbergerRationalNormalCurve)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_HilbertNumeratorRationalNormalCurve(benchmark::State& state) {
  const segre::MonomialIdeal lead = segre::initial_ideal(segre::groebner_basis(rnc(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(segre::hilbert_numerator(lead));
}
BENCHMARK(BM_HilbertNumeratorRationalNormalCurve)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);

void BM_SaturationCuspLines(benchmark::State& state) {
  const segre::Ideal i = segre::load_ideal(segre::generate_example("cusp-lines", {}));
  segre::RandomSource rng(1);
  const segre::Ideal j(i.ring(), {segre::sample_graded_element(i, 3, rng)});
  for (auto _ : state) benchmark::DoNotOptimize(segre::saturate_by_ideal(j, i));
}
BENCHMARK(BM_SaturationCuspLines)->Unit(benchmark::kMicrosecond);

void BM_SegreDegrees(benchmark::State& state) {
  const segre::Ideal ideal = rnc(state.range(0));
  segre::SegreConfig cfg;
  cfg.seed = 1;
  cfg.strategy = state.range(1) ? segre::SaturationStrategy::full_ideal : segre::SaturationStrategy::single_element;
  cfg.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(segre::segre_degrees(ideal, cfg));
}
BENCHMARK(BM_SegreDegrees)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
