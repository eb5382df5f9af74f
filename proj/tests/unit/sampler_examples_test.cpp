#include <gtest/gtest.h>

#include <map>

#include "cpsample/generators.hpp"
#include "cpsample/partition.hpp"
#include "cpsample/samplers.hpp"
#include "cpsample/weights.hpp"

namespace cpsample {
namespace {

double prob_of(const DiscreteDistribution& d, NodeId v) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.support[i] == v) return d.probabilities[i];
  }
  return -1.0;
}

// Node 0 (degree 2) joined to node 1 (degree 3) and node 2 (degree 8);
// threshold chosen by hand so that everything is periphery or core as needed.
Graph hand_graph() {
  std::vector<Edge> e{{0, 1}, {0, 2}};
  NodeId next = 3;
  for (int i = 0; i < 2; ++i) e.push_back({1, next++});
  for (int i = 0; i < 7; ++i) e.push_back({2, next++});
  return Graph::from_edges(next, e);
}

TEST(WeightExamples, PeripheryDegreesThreeAndEight) {
  const Graph g = hand_graph();
  const auto p = partition_graph(g, 8);  // nobody exceeds degree 8
  const auto d = periphery_weights(g, p, 0);
  EXPECT_NEAR(prob_of(d, 1), 0.6, 1e-12);
  EXPECT_NEAR(prob_of(d, 2), 0.4, 1e-12);
}

TEST(WeightExamples, CoreDegreesThreeAndEight) {
  const Graph g = hand_graph();
  const auto p = partition_graph(g, 2);  // nodes 1 and 2 are core
  const auto d = core_weights(g, p, 0);
  EXPECT_NEAR(prob_of(d, 1), 0.4, 1e-12);
  EXPECT_NEAR(prob_of(d, 2), 0.6, 1e-12);
}

TEST(WeightExamples, CoreNormsCancelEqualDegrees) {
  // 0 joined to 1 and 2, both of degree 3.
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}};
  FeatureMatrix x(7, 1, {1, 2, 1, 1, 1, 1, 1});
  const Graph g = Graph::from_edges(7, e).with_features(x);
  const auto p = partition_graph(g, 2);
  const auto d = core_weights(g, p, 0);
  EXPECT_NEAR(prob_of(d, 1), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(prob_of(d, 2), 1.0 / 3.0, 1e-12);
}

TEST(WeightExamples, SingleAndExhaustedSupport) {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  const Graph g = Graph::from_edges(3, e);
  const auto p = partition_graph(g, 2);
  const auto one = periphery_weights(g, p, 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_DOUBLE_EQ(one.probabilities[0], 1.0);
  EXPECT_TRUE(periphery_weights(g, p, 1, [](NodeId) { return true; }).empty());
  EXPECT_TRUE(core_weights(g, p, 1).empty());
}

TEST(HisFfExamples, FullSizeOnConnectedGraphGivesWholeGraph) {
  const Graph g = generate_ba(60, 2, 3);
  const auto p = partition_graph(g);
  SamplerConfig c;
  c.sample_size = g.node_count();
  Rng rng(4);
  const auto r = sample_his_ff(g, p, c, rng);
  EXPECT_EQ(r.subgraph.node_count(), g.node_count());
  EXPECT_EQ(r.subgraph.edge_count(), g.edge_count());
}

TEST(HisRwExamples, StarCenterInEverySubgraph) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= 5; ++v) e.push_back({0, v});
  const Graph g = Graph::from_edges(6, e);
  const auto p = partition_graph(g);
  ASSERT_EQ(p.degree_threshold(), 1u);
  SamplerConfig c;
  c.method = SamplingMethod::kHisRw;
  c.sample_size = 2;
  c.walk_length = 3;
  const SubgraphSampler sampler(g, &p, c);
  for (const auto& r : sampler.sample_many(50)) {
    EXPECT_TRUE(r.subgraph.contains(0));
    EXPECT_EQ(r.subgraph.node_count(), 2u);  // one leaf walk of length 1 plus the center
  }
}

TEST(HisRwExamples, OneHopOnPathFromEndpoint) {
  // Path 0-1-2-3-4 with d_th = 2: everything periphery. A walk with h = 1
  // visits its seed and one neighbor.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  const Graph g = Graph::from_edges(5, e);
  const auto p = partition_graph(g, 2);
  SamplerConfig c;
  c.method = SamplingMethod::kHisRw;
  c.sample_size = 2;
  c.walk_length = 1;
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng(s);
    const auto r = sample_his_rw(g, p, c, rng);
    ASSERT_GE(r.trace.size(), 2u);
    const NodeId a = r.trace[0].first;
    const NodeId b = r.trace[1].first;
    EXPECT_TRUE(g.has_edge(a, b));
  }
}

TEST(SaintExamples, StarEdgesAreUniform) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= 5; ++v) e.push_back({0, v});
  const Graph g = Graph::from_edges(6, e);
  SamplerConfig c;
  c.method = SamplingMethod::kSaintEdge;
  c.edge_budget = 1;
  const SubgraphSampler sampler(g, nullptr, c);
  std::map<NodeId, int> leaf_hits;
  const int n = 20000;
  for (const auto& r : sampler.sample_many(n)) {
    ASSERT_EQ(r.subgraph.node_count(), 2u);
    ++leaf_hits[r.subgraph.global_ids()[1]];
  }
  for (NodeId v = 1; v <= 5; ++v) EXPECT_NEAR(leaf_hits[v] / double(n), 0.2, 0.015);
}

TEST(SaintExamples, BudgetOneOnTriangle) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  const Graph g = Graph::from_edges(3, e);
  SamplerConfig c;
  c.edge_budget = 1;
  Rng rng(1);
  const auto r = sample_saint_edge(g, c, rng);
  EXPECT_EQ(r.subgraph.node_count(), 2u);
  EXPECT_EQ(r.subgraph.edge_count(), 1u);
}

TEST(SaintExamples, WalkCountingBound) {
  const Graph g = generate_ba(200, 2, 5);
  SamplerConfig c;
  c.roots = 1;
  c.walk_length = 0;
  Rng rng(2);
  EXPECT_EQ(sample_saint_rw(g, c, rng).subgraph.node_count(), 1u);
  c.roots = 5;
  c.walk_length = 4;
  for (int i = 0; i < 50; ++i) EXPECT_LE(sample_saint_rw(g, c, rng).subgraph.node_count(), 25u);
}

TEST(UniformExamples, FullAndSingle) {
  const Graph g = generate_ba(50, 2, 5);
  SamplerConfig c;
  c.sample_size = 50;
  Rng rng(3);
  EXPECT_EQ(sample_uniform_node(g, c, rng).subgraph.edge_count(), g.edge_count());
  c.sample_size = 1;
  const auto one = sample_uniform_node(g, c, rng);
  EXPECT_EQ(one.subgraph.node_count(), 1u);
  EXPECT_EQ(one.subgraph.edge_count(), 0u);
}

TEST(UniformExamples, HalfInclusionFrequency) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}};
  const Graph g = Graph::from_edges(4, e);
  SamplerConfig c;
  c.method = SamplingMethod::kUniformNode;
  c.sample_size = 2;
  const SubgraphSampler sampler(g, nullptr, c);
  std::array<int, 4> hits{};
  const int n = 10000;
  for (const auto& r : sampler.sample_many(n)) {
    for (NodeId v : r.subgraph.global_ids()) ++hits[v];
  }
  for (int h : hits) EXPECT_NEAR(h / double(n), 0.5, 0.02);
}

TEST(Properties, CentrumAppearsMoreOftenUnderHisFf) {
  const Graph g = generate_ba(1000, 3, 10);
  const auto p = partition_graph(g);
  NodeId hub = 0;
  for (NodeId v = 1; v < g.node_count(); ++v) {
    if (g.degree(v) > g.degree(hub)) hub = v;
  }
  auto frequency = [&](SamplingMethod m) {
    SamplerConfig c;
    c.method = m;
    c.sample_size = 100;
    c.gamma = 1.0;
    c.seed = 8;
    const SubgraphSampler sampler(g, &p, c);
    int hits = 0;
    for (const auto& r : sampler.sample_many(500)) hits += r.subgraph.contains(hub);
    return hits / 500.0;
  };
  EXPECT_GT(frequency(SamplingMethod::kHisFf), frequency(SamplingMethod::kSaintRw));
}

}  // namespace
}  // namespace cpsample
