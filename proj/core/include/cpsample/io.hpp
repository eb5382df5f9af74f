#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "cpsample/graph.hpp"

namespace cpsample {

struct LoadOptions {
  /// Drop nodes left with degree zero after cleaning (self-loop-only ids).
  bool drop_isolated = true;
};

/// A cleaned graph together with the dense -> original id table.
struct LoadedGraph {
  Graph graph;
  std::vector<std::uint64_t> original_ids;  // original_ids[dense] = id in the source file
};

/// Parses `u<sep>v` lines (sep: space, tab or comma; '#' starts a comment).
/// Directed arcs are symmetrized, self-loops and duplicates removed, ids
/// densified in ascending order of their original value.
LoadedGraph parse_edge_list(std::istream& in, const LoadOptions& options = {});
LoadedGraph load_edge_list(const std::filesystem::path& path, const LoadOptions& options = {});

/// Writes `u v` lines for every undirected edge (u < v).
void write_edge_list(const std::filesystem::path& path, const Graph& graph);
void write_id_map(const std::filesystem::path& path, const std::vector<std::uint64_t>& original_ids);

/// Feature rows are indexed by dense node id. A `.bin` file holds two
/// little-endian uint64 (rows, cols) followed by rows*cols little-endian
/// float32 values in row-major order; anything else is read as CSV.
FeatureMatrix read_features(const std::filesystem::path& path);
void write_features_binary(const std::filesystem::path& path, const FeatureMatrix& features);
Graph load_features(const std::filesystem::path& path, const Graph& graph);

/// `node_id,label` rows (single-class) or one multi-hot 0/1 row per node.
Labels read_labels(const std::filesystem::path& path, NodeId node_count, bool multi_class);

}  // namespace cpsample
