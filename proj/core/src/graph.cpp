#include "cpsample/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cpsample/error.hpp"

namespace cpsample {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0f) {}

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<float> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw DimensionError("feature matrix has " + std::to_string(values_.size()) +
                         " values, expected " + std::to_string(rows_ * cols_));
  }
}

Graph Graph::from_edges(NodeId node_count, std::span<const Edge> edges) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw ParameterError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                           ") out of range for " + std::to_string(node_count) + " nodes");
    }
    if (e.u == e.v) continue;
    arcs.emplace_back(e.u, e.v);
    arcs.emplace_back(e.v, e.u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  g.neighbors_.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.neighbors_.push_back(v);
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
  for (NodeId v = 0; v < node_count; ++v) g.max_degree_ = std::max(g.max_degree_, g.degree(v));
  g.feature_norms_.assign(node_count, 1.0);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept { return arc_index(u, v).has_value(); }

std::optional<EdgeIndex> Graph::arc_index(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return std::nullopt;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return offsets_[u] + static_cast<EdgeIndex>(it - nbrs.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_features(FeatureMatrix features) const {
  if (features.rows() != node_count()) {
    throw DimensionError("feature rows (" + std::to_string(features.rows()) +
                         ") != node count (" + std::to_string(node_count()) + ")");
  }
  Graph g = *this;
  for (NodeId v = 0; v < node_count(); ++v) {
    double sq = 0.0;
    for (float x : features.row(v)) sq += static_cast<double>(x) * x;
    g.feature_norms_[v] = std::sqrt(sq);
  }
  g.features_ = std::move(features);
  return g;
}

Graph Graph::with_labels(Labels labels) const {
  const std::size_t n = labels.is_multi_class() ? labels.multi_hot.size() : labels.single.size();
  if (n != node_count()) {
    throw DimensionError("label rows (" + std::to_string(n) + ") != node count (" +
                         std::to_string(node_count()) + ")");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::optional<NodeId> Subgraph::local_id(NodeId global) const noexcept {
  auto it = std::lower_bound(global_ids_.begin(), global_ids_.end(), global);
  if (it == global_ids_.end() || *it != global) return std::nullopt;
  return static_cast<NodeId>(it - global_ids_.begin());
}

std::vector<Edge> Subgraph::global_edges() const {
  std::vector<Edge> out = local_.edges();
  for (Edge& e : out) e = {global_ids_[e.u], global_ids_[e.v]};
  return out;
}

bool operator==(const Subgraph& a, const Subgraph& b) {
  return a.global_ids_ == b.global_ids_ && a.local_.edges() == b.local_.edges();
}

Subgraph induced_subgraph(const Graph& graph, std::span<const NodeId> nodes) {
  Subgraph sub;
  sub.global_ids_.assign(nodes.begin(), nodes.end());
  std::sort(sub.global_ids_.begin(), sub.global_ids_.end());
  sub.global_ids_.erase(std::unique(sub.global_ids_.begin(), sub.global_ids_.end()),
                        sub.global_ids_.end());
  if (!sub.global_ids_.empty() && sub.global_ids_.back() >= graph.node_count()) {
    throw ParameterError("node id " + std::to_string(sub.global_ids_.back()) +
                         " out of range for " + std::to_string(graph.node_count()) + " nodes");
  }

  // Both the neighbor lists and global_ids are sorted, so a merge-style walk
  // finds the selected neighbors; it is faster than binary search when the
  // subgraph is a large fraction of the parent.
  std::vector<Edge> local_edges;
  const auto& ids = sub.global_ids_;
  for (NodeId lu = 0; lu < ids.size(); ++lu) {
    auto nbrs = graph.neighbors(ids[lu]);
    auto it = std::upper_bound(ids.begin(), ids.end(), ids[lu]);
    auto nb = std::lower_bound(nbrs.begin(), nbrs.end(), ids[lu]);
    while (it != ids.end() && nb != nbrs.end()) {
      if (*it < *nb) {
        it = std::lower_bound(it, ids.end(), *nb);
      } else if (*nb < *it) {
        nb = std::lower_bound(nb, nbrs.end(), *it);
      } else {
        local_edges.push_back({lu, static_cast<NodeId>(it - ids.begin())});
        ++it;
        ++nb;
      }
    }
  }
  sub.local_ = Graph::from_edges(static_cast<NodeId>(ids.size()), local_edges);
  return sub;
}

}  // namespace cpsample
