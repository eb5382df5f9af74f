#include <benchmark/benchmark.h>

#include <vector>

#include "cpsample/chains.hpp"
#include "cpsample/curvature.hpp"
#include "cpsample/generators.hpp"
#include "cpsample/partition.hpp"
#include "cpsample/samplers.hpp"
#include "cpsample/variance.hpp"

namespace {

using namespace cpsample;

const Graph& ba(NodeId n) {
  // One graph per size, built on first use.
  static std::vector<std::pair<NodeId, Graph>> cache;
  for (const auto& [size, g] : cache) {
    if (size == n) return g;
  }
  cache.emplace_back(n, generate_ba(n, 4, 1));
  return cache.back().second;
}

std::vector<Subgraph> draw(const Graph& g, SamplingMethod method, std::size_t count) {
  SamplerConfig c;
  c.method = method;
  c.sample_size = sample_size_from_rate(g.node_count(), 0.1);
  c.gamma = default_gamma(g.node_count());
  c.seed = 9;
  std::optional<CorePeripheryPartition> p;
  if (method == SamplingMethod::kHisFf || method == SamplingMethod::kHisRw) p = partition_graph(g);
  const SubgraphSampler sampler(g, p ? &*p : nullptr, c);
  std::vector<Subgraph> out;
  for (auto& r : sampler.sample_many(count)) out.push_back(std::move(r.subgraph));
  return out;
}

void BM_Partition(benchmark::State& state) {
  const Graph& g = ba(static_cast<NodeId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(partition_graph(g).degree_threshold());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.edge_count()));
}
BENCHMARK(BM_Partition)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& state) {
  const Graph& g = ba(20'000);
  const auto method = static_cast<SamplingMethod>(state.range(0));
  SamplerConfig c;
  c.method = method;
  c.sample_size = sample_size_from_rate(g.node_count(), 0.1);
  c.gamma = 1.0;
  std::optional<CorePeripheryPartition> p;
  if (method == SamplingMethod::kHisFf || method == SamplingMethod::kHisRw) p = partition_graph(g);
  const SubgraphSampler sampler(g, p ? &*p : nullptr, c);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(i++).subgraph.node_count());
  state.SetLabel(std::string(method_name(method)));
}
BENCHMARK(BM_Sample)
    ->Arg(static_cast<int>(SamplingMethod::kHisFf))
    ->Arg(static_cast<int>(SamplingMethod::kHisRw))
    ->Arg(static_cast<int>(SamplingMethod::kSaintEdge))
    ->Arg(static_cast<int>(SamplingMethod::kSaintRw))
    ->Arg(static_cast<int>(SamplingMethod::kUniformNode))
    ->Unit(benchmark::kMicrosecond);

void BM_ExactCurvature(benchmark::State& state) {
  const Graph& g = ba(static_cast<NodeId>(state.range(0)));
  CurvatureOptions o;
  for (auto _ : state) benchmark::DoNotOptimize(average_curvature(g, o).mean);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.edge_count()));
}
BENCHMARK(BM_ExactCurvature)->Arg(500)->Arg(1'000)->Unit(benchmark::kMillisecond);

void BM_LocalizedCurvature(benchmark::State& state) {
  const Graph& g = ba(50'000);
  CurvatureOptions o;
  o.mode = CurvatureMode::kLocalized;
  for (auto _ : state) benchmark::DoNotOptimize(average_curvature(g, o).mean);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.edge_count()));
}
BENCHMARK(BM_LocalizedCurvature)->Unit(benchmark::kMillisecond);

void BM_ChainPreservation(benchmark::State& state) {
  const Graph& g = ba(10'000);
  const auto subs = draw(g, SamplingMethod::kHisFf, 50);
  const auto set = enumerate_chains(g, static_cast<std::uint32_t>(state.range(0)), {});
  for (auto _ : state) benchmark::DoNotOptimize(chain_preservation_rate(g, set, subs).rate);
  state.counters["chains"] = static_cast<double>(set.chains.size());
}
BENCHMARK(BM_ChainPreservation)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AggregationVariance(benchmark::State& state) {
  const Graph& g = ba(10'000);
  const auto subs = draw(g, SamplingMethod::kHisFf, 50);
  const ForwardConfig f{2, static_cast<std::uint32_t>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(aggregation_variance(g, subs, f).var_avg);
}
BENCHMARK(BM_AggregationVariance)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
