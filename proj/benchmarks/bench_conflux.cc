#include <benchmark/benchmark.h>

#include "conflux/amalgamation.h"
#include "conflux/catalog.h"
#include "conflux/constructions.h"
#include "conflux/cycles.h"
#include "conflux/graph.h"
#include "conflux/morphism.h"
#include "conflux/sequence.h"

namespace {

using namespace conflux;

Morphism cycle_cover(std::size_t base, std::size_t sheets) {
  auto top = share(cycle_graph(base * sheets));
  auto bottom = share(cycle_graph(base));
  std::vector<Vertex> images(base * sheets);
  for (std::size_t j = 0; j < images.size(); ++j) images[j] = static_cast<Vertex>(j % base);
  return Morphism(top, bottom, std::move(images));
}

void BM_ClassifyCycleCover(benchmark::State& state) {
  const Morphism f = cycle_cover(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_ClassifyCycleCover)->Arg(4)->Arg(8)->Arg(16);

void BM_HereditaryUnicoherence(benchmark::State& state) {
  const auto graphs = connected_graphs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    for (const Graph& g : graphs) count += is_hereditarily_unicoherent(g);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_HereditaryUnicoherence)->DenseRange(4, 6);

void BM_ConnectedAmalgamOfCovers(benchmark::State& state) {
  const Morphism f = cycle_cover(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(connected_amalgam(f, f));
}
BENCHMARK(BM_ConnectedAmalgamOfCovers)->Arg(3)->Arg(6);

void BM_FindConfluentWitness(benchmark::State& state) {
  const Morphism f = cycle_cover(static_cast<std::size_t>(state.range(0)), 2);
  const CycleMap w{f, *as_cycle(f.domain()), *as_cycle(f.codomain())};
  for (auto _ : state) benchmark::DoNotOptimize(find_confluent_witness(w));
}
BENCHMARK(BM_FindConfluentWitness)->Arg(4)->Arg(8);

void BM_BuildPrefix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_fraisse_prefix(2, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildPrefix)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
