// Serial reference vs OpenMP kernel on the same inputs.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "sidon/dense.hpp"
#include "sidon/planes.hpp"
#include "sidon/search.hpp"

using namespace sidon;

namespace {

const PlanarCandidate& planar_input() {
  static const PlanarCandidate c = coulter_matthews(FiniteField::create(3, 5), 3);
  return c;
}

const PlaneAction& action_input() {
  static const PlaneAction a = family_build(FiniteField::create(13, 1), Family::iv);
  return a;
}

void BM_IsPlanarSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(is_planar_serial(planar_input()));
}
void BM_IsPlanarParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(is_planar(planar_input()));
}

void BM_StabilizersSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(stabilizer_scan_serial(action_input()));
}
void BM_StabilizersParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(stabilizer_scan(action_input()));
}

void BM_MaxSidonSerial(benchmark::State& st) {
  const auto g = AbelianGroup::cyclic(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(max_sidon_serial(g));
}
void BM_MaxSidonParallel(benchmark::State& st) {
  const auto g = AbelianGroup::cyclic(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(max_sidon(g));
}

// family_build fills its permutation tables in a parallel loop; one thread is
// the serial baseline.
void BM_FamilyBuild(benchmark::State& st) {
  const auto f = FiniteField::create(13, 1);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(family_build(f, Family::i));
  omp_set_num_threads(saved);
}

}  // namespace

BENCHMARK(BM_IsPlanarSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsPlanarParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_StabilizersSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilizersParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaxSidonSerial)->Arg(57)->Arg(73)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxSidonParallel)->Arg(57)->Arg(73)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FamilyBuild)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
