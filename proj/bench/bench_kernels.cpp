#include <benchmark/benchmark.h>

#include "univjac/balanced.hpp"
#include "univjac/dual_graph.hpp"
#include "univjac/sweep.hpp"

namespace {

// cycle of genus-1 vertices, with a few chords
univjac::DualGraph ring(int n) {
  std::vector<univjac::Vertex> vs;
  std::vector<std::pair<std::string, std::string>> es;
  auto id = [](int i) { return "V" + std::to_string(i); };
  for (int i = 0; i < n; ++i) vs.push_back({id(i), 1});
  for (int i = 0; i < n; ++i) es.emplace_back(id(i), id((i + 1) % n));
  for (int i = 0; i + 2 < n; i += 3) es.emplace_back(id(i), id(i + 2));
  return univjac::DualGraph(std::move(vs), es);
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto g = ring(static_cast<int>(state.range(0)));
  const auto d = g.total_genus() - 1;
  for (auto _ : state) benchmark::DoNotOptimize(univjac::enumerate_balanced_serial(g, d, false, univjac::SubcurveMode::all));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto g = ring(static_cast<int>(state.range(0)));
  const auto d = g.total_genus() - 1;
  for (auto _ : state) benchmark::DoNotOptimize(univjac::enumerate_balanced(g, d, false, univjac::SubcurveMode::all));
}

univjac::SweepSpec sweep_spec() {
  univjac::SweepSpec spec;
  spec.grid.g_min = 3;
  spec.grid.g_max = 14;
  spec.commands = {"invariants", "independence", "compare", "theta"};
  return spec;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = sweep_spec();
  for (auto _ : state) benchmark::DoNotOptimize(univjac::run_sweep_serial(spec));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = sweep_spec();
  for (auto _ : state) benchmark::DoNotOptimize(univjac::run_sweep(spec, univjac::sweep_threads()));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(6)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(6)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
