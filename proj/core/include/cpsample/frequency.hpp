#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cpsample/graph.hpp"

namespace cpsample {

/// Appearance counts of nodes and edges over a set of sampled subgraphs.
/// Edge counts are indexed by the parent graph's arc index of (u, v), u < v.
struct FrequencyCounters {
  std::size_t n_subgraphs = 0;
  std::vector<std::uint32_t> node_counts;
  std::vector<std::uint32_t> arc_counts;

  std::uint32_t node_count(NodeId v) const { return node_counts[v]; }
  /// C_uv for an existing edge; 0 when (u, v) is not an edge.
  std::uint32_t edge_count(const Graph& graph, NodeId u, NodeId v) const;
};

/// Count-ratio normalization: lambda_v = C_v / n, alpha_uv = C_uv / C_v.
/// alpha is indexed by arc: the arc u -> v holds C_uv / C_v, so both
/// directions of an edge are present. It is 0 where C_uv = 0; lambda is 0 for
/// unseen nodes (seen[v] == 0).
struct NormCoefficients {
  std::vector<double> lambda;
  std::vector<std::uint8_t> seen;
  std::vector<double> alpha;
};

/// All subgraphs must come from `graph`.
FrequencyCounters accumulate_frequencies(const Graph& graph, std::span<const Subgraph> subgraphs);

/// Throws ParameterError when counters.n_subgraphs == 0.
NormCoefficients compute_norm_coefficients(const Graph& graph, const FrequencyCounters& counters);

}  // namespace cpsample
