#include <gtest/gtest.h>

#include "cpsample/error.hpp"
#include "cpsample/generators.hpp"
#include "cpsample/partition.hpp"
#include "oracles.hpp"

namespace cpsample {
namespace {

TEST(Partition, StarGraph) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= 6; ++v) e.push_back({0, v});
  const Graph g = Graph::from_edges(7, e);
  EXPECT_EQ(compute_degree_threshold(g), 1u);
  const auto p = partition_graph(g);
  EXPECT_EQ(p.core_count(), 1u);
  EXPECT_TRUE(p.is_core(0));
  EXPECT_EQ(p.vertical_edge_count(), 6u);
  EXPECT_EQ(p.core_neighbors(3).size(), 1u);
  EXPECT_TRUE(p.periphery_neighbors(3).empty());
}

TEST(Partition, RegularGraphIsDegenerate) {
  // Cycle: every degree is 2, no threshold separates anything.
  std::vector<Edge> e;
  for (NodeId v = 0; v < 8; ++v) e.push_back({v, (v + 1) % 8});
  const Graph g = Graph::from_edges(8, e);
  EXPECT_EQ(compute_degree_threshold(g), 2u);
  const auto p = partition_graph(g);
  EXPECT_TRUE(p.degenerate());
  EXPECT_EQ(p.periphery_count(), 8u);
  EXPECT_EQ(p.vertical_edge_count(), 0u);
}

TEST(Partition, EdgelessThrows) {
  const Graph g = Graph::from_edges(3, {});
  EXPECT_THROW(compute_degree_threshold(g), ParameterError);
  EXPECT_THROW(partition_graph(g, 0), ParameterError);
}

TEST(Partition, ObjectiveMatchesDirectCount) {
  const Graph g = generate_ba(300, 3, 11);
  const auto f = vertical_edge_objective(g);
  for (std::uint32_t d = 1; d <= g.max_degree(); ++d) {
    EXPECT_EQ(f[d], oracle::vertical_edges_at(g, d)) << "d=" << d;
  }
}

TEST(Partition, ThresholdMatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const NodeId n = 20 + static_cast<NodeId>(seed * 3 % 180);
    const Graph g = seed % 2 ? oracle::random_graph(n, 0.08, seed) : generate_ba(n, 2, seed);
    if (g.edge_count() == 0) continue;
    EXPECT_EQ(compute_degree_threshold(g), oracle::brute_force_threshold(g)) << "seed " << seed;
  }
}

TEST(Partition, CountsAreConsistent) {
  const Graph g = generate_ba(500, 3, 5);
  const auto p = partition_graph(g);
  EXPECT_EQ(p.core_count() + p.periphery_count(), g.node_count());
  EXPECT_EQ(p.core_edge_count() + p.periphery_edge_count() + p.vertical_edge_count(), g.edge_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    EXPECT_EQ(p.is_core(v), g.degree(v) > p.degree_threshold());
    EXPECT_EQ(p.core_neighbors(v).size() + p.periphery_neighbors(v).size(), g.degree(v));
    for (NodeId u : p.core_neighbors(v)) EXPECT_TRUE(p.is_core(u));
    for (NodeId u : p.periphery_neighbors(v)) EXPECT_TRUE(p.is_periphery(u));
  }
  const auto s = partition_stats(p, g, 0.0);
  EXPECT_DOUBLE_EQ(s.core_ratio, static_cast<double>(p.core_count()) / g.node_count());
  EXPECT_DOUBLE_EQ(s.vertical_edge_ratio, static_cast<double>(p.vertical_edge_count()) / g.edge_count());
}

}  // namespace
}  // namespace cpsample
