#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cpsample/error.hpp"
#include "cpsample/graph.hpp"
#include "cpsample/io.hpp"
#include "oracles.hpp"

namespace cpsample {
namespace {

Graph path4() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}};
  return Graph::from_edges(4, e);
}

TEST(Graph, SymmetrizesAndDedupes) {
  const std::vector<Edge> e{{0, 1}, {1, 0}, {1, 2}, {2, 2}, {0, 1}};
  const Graph g = Graph::from_edges(3, e);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.arc_count(), 4u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(2, 2));
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(Graph, NeighborsSortedAndEdgesOrdered) {
  const std::vector<Edge> e{{3, 0}, {0, 2}, {1, 0}};
  const Graph g = Graph::from_edges(4, e);
  const auto n0 = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(n0.begin(), n0.end()));
  for (const Edge& x : g.edges()) EXPECT_LT(x.u, x.v);
  ASSERT_TRUE(g.arc_index(0, 3).has_value());
  EXPECT_EQ(g.neighbors(0)[*g.arc_index(0, 3) - g.arc_begin(0)], 3u);
  EXPECT_FALSE(g.arc_index(1, 2).has_value());
}

TEST(Graph, RejectsOutOfRangeIds) {
  const std::vector<Edge> e{{0, 5}};
  EXPECT_THROW(Graph::from_edges(3, e), ParameterError);
}

TEST(Graph, FeatureNormsDefaultToOne) {
  const Graph g = path4();
  EXPECT_FALSE(g.has_features());
  for (NodeId v = 0; v < 4; ++v) EXPECT_DOUBLE_EQ(g.feature_norm(v), 1.0);
  FeatureMatrix x(4, 2, {3, 4, 0, 0, 1, 0, 0, 2});
  const Graph h = g.with_features(x);
  EXPECT_DOUBLE_EQ(h.feature_norm(0), 5.0);
  EXPECT_DOUBLE_EQ(h.feature_norm(1), 0.0);
  EXPECT_DOUBLE_EQ(h.feature_norm(3), 2.0);
  EXPECT_THROW(g.with_features(FeatureMatrix(3, 2)), DimensionError);
}

TEST(Subgraph, InducedKeepsAllInternalEdges) {
  const Graph g = oracle::random_graph(40, 0.15, 7);
  const std::vector<NodeId> nodes{1, 3, 5, 7, 9, 11, 13, 2, 3, 5};
  const Subgraph s = induced_subgraph(g, nodes);
  EXPECT_EQ(s.node_count(), 8u);
  EXPECT_TRUE(std::is_sorted(s.global_ids().begin(), s.global_ids().end()));
  EXPECT_TRUE(oracle::is_node_induced(g, s));
  for (NodeId l = 0; l < s.node_count(); ++l) EXPECT_EQ(s.local_id(s.global_id(l)), l);
  EXPECT_FALSE(s.contains(0));
}

TEST(Subgraph, RejectsForeignNodes) {
  const Graph g = path4();
  const std::vector<NodeId> nodes{0, 4};
  EXPECT_THROW(induced_subgraph(g, nodes), ParameterError);
}

TEST(EdgeList, ParsesMixedSeparatorsAndComments) {
  std::istringstream in("# header\n10 20\n20\t30\r\n30,10\n\n% not a comment?\n");
  EXPECT_THROW(parse_edge_list(in), ParseError);

  std::istringstream ok("# header\n10 20\n20\t30\r\n30,10\n\n");
  const LoadedGraph lg = parse_edge_list(ok);
  EXPECT_EQ(lg.graph.node_count(), 3u);
  EXPECT_EQ(lg.graph.edge_count(), 3u);
  EXPECT_EQ(lg.original_ids, (std::vector<std::uint64_t>{10, 20, 30}));
}

TEST(EdgeList, ReportsLineNumberOnBadRow) {
  std::istringstream in("1 2\n2 3\n3 x\n");
  try {
    parse_edge_list(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(EdgeList, RejectsEmptyInput) {
  std::istringstream in("# nothing\n5 5\n");
  EXPECT_THROW(parse_edge_list(in), ParameterError);
}

TEST(EdgeList, MissingFileIsIoError) {
  EXPECT_THROW(load_edge_list("/nonexistent/graph.txt"), IoError);
}

TEST(EdgeList, RoundTripThroughDisk) {
  const Graph g = oracle::random_graph(30, 0.2, 3);
  const auto dir = std::filesystem::temp_directory_path() / "cpsample_graph_test";
  std::filesystem::create_directories(dir);
  write_edge_list(dir / "g.txt", g);
  const LoadedGraph back = load_edge_list(dir / "g.txt", {.drop_isolated = false});
  EXPECT_EQ(back.graph.edges().size(), g.edges().size());
  std::filesystem::remove_all(dir);
}

TEST(Features, BinaryAndCsvAgree) {
  const auto dir = std::filesystem::temp_directory_path() / "cpsample_feature_test";
  std::filesystem::create_directories(dir);
  FeatureMatrix x(3, 2, {1.5f, -2.0f, 0.0f, 4.0f, 8.0f, 0.25f});
  write_features_binary(dir / "x.bin", x);
  {
    std::ofstream csv(dir / "x.csv");
    csv << "1.5,-2\n0,4\n8,0.25\n";
  }
  const FeatureMatrix a = read_features(dir / "x.bin");
  const FeatureMatrix b = read_features(dir / "x.csv");
  ASSERT_EQ(a.rows(), 3u);
  ASSERT_EQ(a.cols(), 2u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_FLOAT_EQ(a.values()[i], x.values()[i]);
    EXPECT_FLOAT_EQ(b.values()[i], x.values()[i]);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace cpsample
