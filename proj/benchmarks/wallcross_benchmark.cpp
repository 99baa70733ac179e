#include <benchmark/benchmark.h>

#include "wallcross/chambers.hpp"
#include "wallcross/crossing.hpp"
#include "wallcross/sampling.hpp"
#include "wallcross/verify.hpp"

namespace {

using namespace wallcross;

void BM_EnumerateWalls(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_walls(state.range(0)));
}
BENCHMARK(BM_EnumerateWalls)->Arg(13)->Arg(101)->Arg(1001)->Arg(10001);

void BM_SeparationCrossingsF0(benchmark::State& state) {
  const std::vector<LatticeClass> word{sigma_minus(), sigma_plus()};
  const Isometry f0 = compose_word(word);
  const ChamberPoint p = poincare_to_hyperboloid(Rational(-1, 2), Rational(-1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(separation_crossings(f0, p));
}
BENCHMARK(BM_SeparationCrossingsF0);

// Random words of the given length from fixed sample points.
void BM_SeparationCrossingsRandom(benchmark::State& state) {
  InstanceSampler sampler(17);
  std::vector<std::pair<Isometry, ChamberPoint>> cases;
  for (int i = 0; i < 32; ++i)
    cases.emplace_back(compose_word(sampler.word(basic_reflections(), state.range(0), state.range(0))),
                       sampler.poincare_point());
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [m, p] = cases[i++ % cases.size()];
    try {
      benchmark::DoNotOptimize(separation_crossings(m, p));
    } catch (const std::exception&) {
    }
  }
}
BENCHMARK(BM_SeparationCrossingsRandom)->DenseRange(1, 4);

void BM_SegmentOracle(benchmark::State& state) {
  const std::vector<LatticeClass> word{sigma_minus(), sigma_plus()};
  const ChamberPoint p = poincare_to_hyperboloid(Rational(-1, 2), Rational(-1, 2));
  const ChamberPoint q = act(compose_word(word), p);
  for (auto _ : state) benchmark::DoNotOptimize(segment_crossings_oracle(p, q));
}
BENCHMARK(BM_SegmentOracle);

void BM_Verify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_verify());
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
