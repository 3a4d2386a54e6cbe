#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rotaperm/field.hpp"

using namespace rotaperm;

namespace {

std::vector<Elem> random_elems(const Field& f, std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<Elem> v(n);
  for (auto& e : v) e = Elem{static_cast<std::uint32_t>(rng() % f.size())};
  return v;
}

void BM_MulTable(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  const auto v = random_elems(f, 4096);
  Elem acc{1};
  for (auto _ : state) {
    for (Elem e : v) acc = f.mul(acc, e) + Elem{1};
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_MulTable)->Arg(3)->Arg(7)->Arg(11);

void BM_MulReference(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  const auto v = random_elems(f, 4096);
  Elem acc{1};
  for (auto _ : state) {
    for (Elem e : v) acc = f.mul_reference(acc, e) + Elem{1};
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_MulReference)->Arg(3)->Arg(7)->Arg(11);

void BM_CubeRoot(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  const auto v = random_elems(f, 4096);
  for (auto _ : state) {
    for (Elem e : v) benchmark::DoNotOptimize(f.cube_root(e));
  }
}
BENCHMARK(BM_CubeRoot)->Arg(7)->Arg(11);

void BM_CubicRoots(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  const auto v = random_elems(f, 3);
  for (auto _ : state) benchmark::DoNotOptimize(f.cubic_roots(v[0], v[1], v[2]));
}
BENCHMARK(BM_CubicRoots)->Arg(5)->Arg(9);

}  // namespace
