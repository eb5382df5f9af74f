#include "cpsample/frequency.hpp"

#include <algorithm>

#include "cpsample/error.hpp"

namespace cpsample {

std::uint32_t FrequencyCounters::edge_count(const Graph& graph, NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  const auto arc = graph.arc_index(u, v);
  return arc ? arc_counts[*arc] : 0;
}

FrequencyCounters accumulate_frequencies(const Graph& graph, std::span<const Subgraph> subgraphs) {
  FrequencyCounters c;
  c.n_subgraphs = subgraphs.size();
  c.node_counts.assign(graph.node_count(), 0);
  c.arc_counts.assign(graph.arc_count(), 0);
  for (const Subgraph& sub : subgraphs) {
    for (NodeId v : sub.global_ids()) {
      if (v >= graph.node_count()) throw ParameterError("subgraph does not belong to this graph");
      ++c.node_counts[v];
    }
    for (const Edge& e : sub.global_edges()) {
      const auto arc = graph.arc_index(e.u, e.v);
      if (!arc) throw ParameterError("subgraph edge missing from the parent graph");
      ++c.arc_counts[*arc];
    }
  }
  return c;
}

NormCoefficients compute_norm_coefficients(const Graph& graph, const FrequencyCounters& counters) {
  if (counters.n_subgraphs == 0) throw ParameterError("normalization needs at least one subgraph");
  NormCoefficients coeffs;
  const NodeId n = graph.node_count();
  coeffs.lambda.assign(n, 0.0);
  coeffs.seen.assign(n, 0);
  coeffs.alpha.assign(graph.arc_count(), 0.0);
  for (NodeId v = 0; v < n; ++v) {
    const std::uint32_t cv = counters.node_counts[v];
    coeffs.seen[v] = cv > 0;
    coeffs.lambda[v] = static_cast<double>(cv) / static_cast<double>(counters.n_subgraphs);
  }
  for (NodeId u = 0; u < n; ++u) {
    const auto nbrs = graph.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const NodeId v = nbrs[i];
      const std::uint32_t cuv = counters.edge_count(graph, u, v);
      if (cuv == 0) continue;
      coeffs.alpha[graph.arc_begin(u) + i] = static_cast<double>(cuv) / counters.node_counts[v];
    }
  }
  return coeffs;
}

}  // namespace cpsample
