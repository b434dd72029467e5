#include <benchmark/benchmark.h>

#include "fprlab/bases.hpp"
#include "fprlab/classes.hpp"
#include "fprlab/fpr.hpp"
#include "fprlab/genspread.hpp"
#include "fprlab/genus.hpp"
#include "fprlab/spec.hpp"

using namespace fprlab;

namespace {

PermGroup acting(const char* text) { return realize_spec(parse_spec(text)).group; }

void BM_ChainSym(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_group(n).order());
}
BENCHMARK(BM_ChainSym)->Arg(10)->Arg(20)->Arg(40);

void BM_ClassTable(benchmark::State& state) {
  const auto G = acting("psl:2:23@projective");
  for (auto _ : state) benchmark::DoNotOptimize(ClassTable::build(G).size());
}
BENCHMARK(BM_ClassTable)->Unit(benchmark::kMillisecond);

void BM_FprReportSp62(benchmark::State& state) {
  const auto G = acting("sp:6:2@forms:minus");
  for (auto _ : state) benchmark::DoNotOptimize(fpr_report(ClassTable::build(G)).max_fpr);
}
BENCHMARK(BM_FprReportSp62)->Unit(benchmark::kMillisecond);

void BM_GeneratingGraph(benchmark::State& state) {
  const auto G = acting(state.range(0) == 5 ? "alt:5" : "alt:6");
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(G).edge_count());
}
BENCHMARK(BM_GeneratingGraph)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SpreadAlt5(benchmark::State& state) {
  const auto G = alternating_group(5);
  for (auto _ : state) benchmark::DoNotOptimize(spread_exact(G).s);
}
BENCHMARK(BM_SpreadAlt5)->Unit(benchmark::kMillisecond);

void BM_GenusScreenPsl223(benchmark::State& state) {
  const auto G = acting("psl:2:23@projective");
  GenusScreenOptions options;
  options.insoluble_filter = true;
  for (auto _ : state) benchmark::DoNotOptimize(genus_screen(G, 0, options).signatures.size());
}
BENCHMARK(BM_GenusScreenPsl223)->Unit(benchmark::kMillisecond);

void BM_BaseSize(benchmark::State& state) {
  const auto G = acting("pgl:3:3@projective");
  for (auto _ : state) benchmark::DoNotOptimize(base_size_exact(G).upper);
}
BENCHMARK(BM_BaseSize)->Unit(benchmark::kMillisecond);

void BM_RandomBaseProb(benchmark::State& state) {
  const auto G = acting("sym:7@ksets:2");
  for (auto _ : state) benchmark::DoNotOptimize(random_base_prob(G, 3, 100000).bases);
}
BENCHMARK(BM_RandomBaseProb)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
