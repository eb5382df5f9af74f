#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cpsample/forward.hpp"
#include "cpsample/graph.hpp"

namespace cpsample {

struct VarianceReport {
  /// Population variance (divisor k) of Y_i(v) over the k subgraphs holding v;
  /// 0 for nodes seen at most once.
  std::vector<double> per_node_var;
  std::vector<std::uint32_t> appearance_counts;
  /// Sum of per_node_var over all parent nodes divided by |V|.
  double var_avg = 0.0;
  /// curve[i] = var_avg using only the first i + 1 subgraphs.
  std::vector<double> curve;
};

/// Runs the reference forward pass on every subgraph with one shared set of
/// weights and summarizes the spread of each node's output norm.
VarianceReport aggregation_variance(const Graph& graph, std::span<const Subgraph> subgraphs,
                                    const ForwardConfig& config, unsigned threads = 1);

/// Same, with explicit weights (the first matrix must match the feature width).
VarianceReport aggregation_variance(const Graph& graph, std::span<const Subgraph> subgraphs,
                                    std::span<const DenseMatrix> weights, unsigned threads = 1);

}  // namespace cpsample
