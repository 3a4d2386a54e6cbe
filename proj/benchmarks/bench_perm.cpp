#include <benchmark/benchmark.h>

#include "rotaperm/invert.hpp"
#include "rotaperm/permcheck.hpp"
#include "rotaperm/search.hpp"

using namespace rotaperm;

namespace {

void BM_IsPermutation(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  const Coeffs c = named_coeffs("T4");
  for (auto _ : state) benchmark::DoNotOptimize(is_permutation(f, c).is_permutation);
}
BENCHMARK(BM_IsPermutation)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SearchM(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_m(f).size());
}
BENCHMARK(BM_SearchM)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_InvertT1Resolvent(benchmark::State& state) {
  const Field f(7);
  const Triple t = eval_F(f, named_coeffs("T1"), {Elem{5}, Elem{77}, Elem{100}});
  for (auto _ : state) benchmark::DoNotOptimize(invert_T1_resolvent(f, t));
}
BENCHMARK(BM_InvertT1Resolvent);

void BM_InvertT4Closed(benchmark::State& state) {
  const Field f(7);
  const Triple t = eval_F(f, named_coeffs("T4"), {Elem{5}, Elem{77}, Elem{100}});
  for (auto _ : state) benchmark::DoNotOptimize(invert_T4(f, t));
}
BENCHMARK(BM_InvertT4Closed);

}  // namespace
