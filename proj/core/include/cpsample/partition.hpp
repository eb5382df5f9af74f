#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cpsample/graph.hpp"

namespace cpsample {

/// Number of edges whose endpoint degrees straddle each candidate threshold:
/// objective[d] = |{(u, v) in E : d_u > d >= d_v}| for d in [0, max_degree].
/// Computed in O(|E| + max_degree) with a difference array over degrees.
std::vector<std::uint64_t> vertical_edge_objective(const Graph& graph);

/// Smallest d in [1, max_degree] maximizing vertical_edge_objective. When the
/// objective is zero everywhere (e.g. regular graphs) returns max_degree, so
/// the core is empty. Throws ParameterError on an edgeless graph.
std::uint32_t compute_degree_threshold(const Graph& graph);

/// Degree-threshold split into a high-degree core and a low-degree periphery.
///
/// Besides the counts, the partition keeps every node's neighbors regrouped
/// into periphery neighbors followed by core neighbors, which is the access
/// pattern of the hierarchical samplers.
class CorePeripheryPartition {
 public:
  CorePeripheryPartition() = default;

  std::uint32_t degree_threshold() const noexcept { return d_th_; }
  bool is_core(NodeId v) const noexcept { return is_core_[v] != 0; }
  bool is_periphery(NodeId v) const noexcept { return is_core_[v] == 0; }

  std::size_t core_count() const noexcept { return core_count_; }
  std::size_t periphery_count() const noexcept { return periphery_nodes_.size(); }
  std::size_t core_edge_count() const noexcept { return core_edges_; }
  std::size_t periphery_edge_count() const noexcept { return periphery_edges_; }
  std::size_t vertical_edge_count() const noexcept { return vertical_edges_; }
  bool degenerate() const noexcept { return core_count_ == 0; }

  std::span<const NodeId> periphery_nodes() const noexcept { return periphery_nodes_; }

  /// N_per(v): neighbors of v in the periphery, ascending.
  std::span<const NodeId> periphery_neighbors(NodeId v) const noexcept {
    return {split_.data() + offsets_[v], split_.data() + core_begin_[v]};
  }
  /// N_cor(v): neighbors of v in the core, ascending.
  std::span<const NodeId> core_neighbors(NodeId v) const noexcept {
    return {split_.data() + core_begin_[v], split_.data() + offsets_[v + 1]};
  }

 private:
  friend CorePeripheryPartition partition_graph(const Graph& graph, std::uint32_t d_th);

  std::uint32_t d_th_ = 0;
  std::vector<std::uint8_t> is_core_;
  std::vector<NodeId> periphery_nodes_;
  std::size_t core_count_ = 0;
  std::size_t core_edges_ = 0;
  std::size_t periphery_edges_ = 0;
  std::size_t vertical_edges_ = 0;
  std::vector<EdgeIndex> offsets_;
  std::vector<EdgeIndex> core_begin_;
  std::vector<NodeId> split_;
};

/// Core = {v : degree(v) > d_th}. Throws ParameterError when d_th < 1.
CorePeripheryPartition partition_graph(const Graph& graph, std::uint32_t d_th);

/// compute_degree_threshold followed by partition_graph.
CorePeripheryPartition partition_graph(const Graph& graph);

/// One row of the partition report: threshold, core node ratio, vertical
/// edge ratio and the CPU time spent computing the partition.
struct PartitionStats {
  std::uint32_t d_th = 0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t core_count = 0;
  std::size_t vertical_edge_count = 0;
  double core_ratio = 0.0;
  double vertical_edge_ratio = 0.0;
  double cpu_seconds = 0.0;
  bool degenerate = false;
};

PartitionStats partition_stats(const CorePeripheryPartition& partition, const Graph& graph,
                               double cpu_seconds);

}  // namespace cpsample
