#include <benchmark/benchmark.h>

#include "heronfrieze/laurent.hpp"

namespace {

// Longest diagonal of the fan: crosses every other diagonal.
void BM_ExpandFan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hf::TriCycle g = hf::TriCycle::fan(n);
  for (auto _ : state) benchmark::DoNotOptimize(hf::expand(g, hf::MeasSym::x(2, n)));
}
BENCHMARK(BM_ExpandFan)->DenseRange(4, 8, 2);

void BM_FanClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hf::fan_expand(n, hf::MeasSym::x(2, n)));
}
BENCHMARK(BM_FanClosedForm)->DenseRange(4, 8, 2);

// Zig-zag triangulation: thin, but the spanning tree is not a star.
void BM_ExpandZigZag(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<hf::Edge> diags;
  int lo = 1;
  int hi = n - 1;
  bool step_lo = false;
  diags.push_back({1, n - 1});
  while (hi - lo > 2) {
    if (step_lo) {
      ++lo;
    } else {
      --hi;
    }
    diags.push_back({lo, hi});
    step_lo = !step_lo;
  }
  hf::TriCycle g(n, diags);
  for (auto _ : state) benchmark::DoNotOptimize(hf::expand(g, hf::MeasSym::s(1, n / 2, n)));
}
BENCHMARK(BM_ExpandZigZag)->DenseRange(6, 8, 2);

}  // namespace

BENCHMARK_MAIN();
