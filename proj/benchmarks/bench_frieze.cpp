#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "heronfrieze/frieze.hpp"

namespace {

hf::Polygon polygon(int n) {
  std::mt19937_64 rng(static_cast<unsigned>(n));
  while (true) {
    hf::Polygon p = hftest::random_polygon(rng, n, 100);
    if (hftest::is_generic(hf::measure_all(p))) return p;
  }
}

void BM_FriezeFromPolygon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hf::Polygon p = polygon(n);
  for (auto _ : state) benchmark::DoNotOptimize(hf::frieze_from_polygon(p, {0, 3L * n}));
}
BENCHMARK(BM_FriezeFromPolygon)->DenseRange(4, 12, 4);

void BM_PropagateHeronian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hf::Window w{0, 3L * n};
  hf::HPath path = hf::rim_path(n, w.lo);
  hf::PathValues values = hf::read_path(hf::frieze_from_polygon(polygon(n), w), path);
  for (auto _ : state) benchmark::DoNotOptimize(hf::propagate_heronian(n, path, values, w));
}
BENCHMARK(BM_PropagateHeronian)->DenseRange(4, 12, 4);

void BM_PropagateCM(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hf::Window w{0, 3L * n};
  hf::CMPath path = hf::cm_rim_path(n, w.lo);
  hf::PathValues values = hf::read_path(hf::cmfrieze_from_polygon(polygon(n), w), path);
  for (auto _ : state) benchmark::DoNotOptimize(hf::propagate_cm(n, path, values, w));
}
BENCHMARK(BM_PropagateCM)->DenseRange(4, 12, 4);

void BM_VerifyCoherence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hf::Frieze z = hf::cmfrieze_from_polygon(polygon(n), {0, 3L * n});
  for (auto _ : state) benchmark::DoNotOptimize(hf::verify_coherence(z));
}
BENCHMARK(BM_VerifyCoherence)->DenseRange(4, 12, 4);

}  // namespace
