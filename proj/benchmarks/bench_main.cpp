#include <benchmark/benchmark.h>

#include "vgt/barrier.hpp"
#include "vgt/beta.hpp"
#include "vgt/recurrence.hpp"
#include "vgt/scidec.hpp"

using namespace vgt;

namespace {

const Rat kRel(Int(1), Int::ten_pow(9));

void ConstantsSmall(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_kn(2, 2, 2, Variant::Section3));
  }
}
BENCHMARK(ConstantsSmall);

void ConstantsLarge(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_kn(3, 10, 3, Variant::Section3));
  }
}
BENCHMARK(ConstantsLarge);

void DeltaSmall(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_kn(1, 1, Variant::Section3, kRel));
  }
}
BENCHMARK(DeltaSmall);

void DeltaLarge(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_kn(3, 10, Variant::Section3, kRel));
  }
}
BENCHMARK(DeltaLarge);

void EpsilonMid(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(epsilon_kn(2, 2, Variant::Section3, kRel));
  }
}
BENCHMARK(EpsilonMid);

void EpsilonExtreme(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(epsilon_kn(3, 10, Variant::Section3, kRel));
  }
}
BENCHMARK(EpsilonExtreme);

void RenderExtreme(benchmark::State& state) {
  Enc e = epsilon_kn(3, 10, Variant::Section3, kRel);
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_scidec(e, 3).str());
  }
}
BENCHMARK(RenderExtreme);

}  // namespace

BENCHMARK_MAIN();
