#include "cpsample/partition.hpp"

#include <algorithm>

#include "cpsample/error.hpp"

namespace cpsample {

std::vector<std::uint64_t> vertical_edge_objective(const Graph& graph) {
  const std::uint32_t d_max = graph.max_degree();
  // An edge with degrees lo < hi counts for every d in [lo, hi - 1].
  std::vector<std::int64_t> diff(static_cast<std::size_t>(d_max) + 2, 0);
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const std::uint32_t du = graph.degree(u);
    for (NodeId v : graph.neighbors(u)) {
      if (v <= u) continue;
      const std::uint32_t dv = graph.degree(v);
      if (du == dv) continue;
      ++diff[std::min(du, dv)];
      --diff[std::max(du, dv)];
    }
  }
  std::vector<std::uint64_t> objective(static_cast<std::size_t>(d_max) + 1, 0);
  std::int64_t running = 0;
  for (std::uint32_t d = 0; d <= d_max; ++d) {
    running += diff[d];
    objective[d] = static_cast<std::uint64_t>(running);
  }
  return objective;
}

std::uint32_t compute_degree_threshold(const Graph& graph) {
  if (graph.edge_count() == 0) throw ParameterError("degree threshold undefined on an edgeless graph");
  const auto objective = vertical_edge_objective(graph);
  std::uint32_t best = graph.max_degree();
  std::uint64_t best_value = 0;
  for (std::uint32_t d = 1; d < objective.size(); ++d) {
    if (objective[d] > best_value) {
      best_value = objective[d];
      best = d;
    }
  }
  return best;
}

CorePeripheryPartition partition_graph(const Graph& graph, std::uint32_t d_th) {
  if (d_th < 1) throw ParameterError("degree threshold must be >= 1");
  const NodeId n = graph.node_count();
  CorePeripheryPartition p;
  p.d_th_ = d_th;
  p.is_core_.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    p.is_core_[v] = graph.degree(v) > d_th ? 1 : 0;
    if (p.is_core_[v]) {
      ++p.core_count_;
    } else {
      p.periphery_nodes_.push_back(v);
    }
  }

  p.offsets_.resize(static_cast<std::size_t>(n) + 1);
  p.core_begin_.resize(n);
  p.split_.reserve(graph.arc_count());
  for (NodeId v = 0; v < n; ++v) {
    p.offsets_[v] = p.split_.size();
    auto nbrs = graph.neighbors(v);
    for (NodeId u : nbrs) {
      if (!p.is_core_[u]) p.split_.push_back(u);
    }
    p.core_begin_[v] = p.split_.size();
    for (NodeId u : nbrs) {
      if (p.is_core_[u]) p.split_.push_back(u);
      if (u > v) {
        const int cores = p.is_core_[u] + p.is_core_[v];
        if (cores == 2) {
          ++p.core_edges_;
        } else if (cores == 0) {
          ++p.periphery_edges_;
        } else {
          ++p.vertical_edges_;
        }
      }
    }
  }
  p.offsets_[n] = p.split_.size();
  return p;
}

CorePeripheryPartition partition_graph(const Graph& graph) {
  return partition_graph(graph, compute_degree_threshold(graph));
}

PartitionStats partition_stats(const CorePeripheryPartition& partition, const Graph& graph,
                               double cpu_seconds) {
  PartitionStats s;
  s.d_th = partition.degree_threshold();
  s.node_count = graph.node_count();
  s.edge_count = graph.edge_count();
  s.core_count = partition.core_count();
  s.vertical_edge_count = partition.vertical_edge_count();
  s.core_ratio = s.node_count ? static_cast<double>(s.core_count) / s.node_count : 0.0;
  s.vertical_edge_ratio =
      s.edge_count ? static_cast<double>(s.vertical_edge_count) / s.edge_count : 0.0;
  s.cpu_seconds = cpu_seconds;
  s.degenerate = partition.degenerate();
  return s;
}

}  // namespace cpsample
