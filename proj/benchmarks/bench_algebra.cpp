#include <benchmark/benchmark.h>

#include "rotaperm/lift.hpp"
#include "rotaperm/mpoly.hpp"
#include "rotaperm/proof_polys.hpp"

using namespace rotaperm;

namespace {

void BM_ResultantG(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(resultant(proof::P1(), proof::P3(), 'x'));
}
BENCHMARK(BM_ResultantG)->Unit(benchmark::kMillisecond);

void BM_ResultantH(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(resultant(proof::printed_g(), proof::P2(), 'z'));
}
BENCHMARK(BM_ResultantH)->Unit(benchmark::kMillisecond);

void BM_LiftM3(benchmark::State& state) {
  const ExtField ext{Field(3)};
  for (auto _ : state) benchmark::DoNotOptimize(lift_permutation(ext, named_coeffs("T3")).term_count());
}
BENCHMARK(BM_LiftM3)->Unit(benchmark::kMillisecond);

}  // namespace
