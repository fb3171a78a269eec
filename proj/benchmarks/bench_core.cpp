// Microbenchmarks for the hot paths: enumeration, exact pair sums, sampling
// plus zero counting, the closed-form second moment, and the census scan.
#include <benchmark/benchmark.h>

#include "arw/experiment.hpp"
#include "arw/lattice.hpp"
#include "arw/theory.hpp"
#include "arw/wave.hpp"

namespace {

void BM_EnumerateLatticePoints(benchmark::State& state) {
  const long long m = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arw::enumerate_lattice_points(m));
  }
}
BENCHMARK(BM_EnumerateLatticePoints)->Arg(5525)->Arg(32045);

void BM_RationalPairSum(benchmark::State& state) {
  const auto level = arw::enumerate_lattice_points(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(arw::rational_pair_sum(level, 2, 1));
  }
}
BENCHMARK(BM_RationalPairSum)->Arg(5525)->Arg(32045);

void BM_SampleAndCount(benchmark::State& state) {
  const auto level = arw::enumerate_lattice_points(state.range(0));
  const arw::Segment segment{arw::Direction::angle(1.0), 0.5, {0.0, 0.0}};
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto sample = arw::sample_wave(level, seed++);
    benchmark::DoNotOptimize(arw::count_nodal_intersections(sample, segment));
  }
}
BENCHMARK(BM_SampleAndCount)->Arg(65)->Arg(4225);

void BM_SecondMomentClosedForm(benchmark::State& state) {
  const auto level = arw::enumerate_lattice_points(65);
  const auto dir = arw::Direction::angle(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arw::second_moment_closed_form(level, dir, 1.0));
  }
}
BENCHMARK(BM_SecondMomentClosedForm);

void BM_CensusS(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(arw::census_S(10000));
  }
}
BENCHMARK(BM_CensusS);

}  // namespace

BENCHMARK_MAIN();
