#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cpsample {

using NodeId = std::uint32_t;
using EdgeIndex = std::uint64_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Row-major dense matrix of 32-bit features, one row per node.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols);
  FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<float> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<const float> row(std::size_t r) const {
    return {values_.data() + r * cols_, cols_};
  }
  std::span<float> row(std::size_t r) { return {values_.data() + r * cols_, cols_}; }

  float& at(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  float at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

  std::span<const float> values() const noexcept { return values_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<float> values_;
};

/// Per-node labels: either one class id per node or a multi-hot row per node.
struct Labels {
  std::vector<std::int32_t> single;          // size node_count when single-class
  std::vector<std::vector<std::uint8_t>> multi_hot;  // size node_count when multi-class

  bool is_multi_class() const noexcept { return !multi_hot.empty(); }
};

/// Immutable simple undirected graph in compressed sparse adjacency form.
///
/// Neighbor lists are sorted ascending, symmetric, free of self-loops and
/// duplicates. Every undirected edge {u, v} is stored as two arcs; the arc
/// index of u -> v is its position in the flat neighbor array.
class Graph {
 public:
  Graph() = default;

  /// Builds a cleaned graph: self-loops dropped, arcs symmetrized, duplicates
  /// collapsed. Every endpoint must be < node_count.
  static Graph from_edges(NodeId node_count, std::span<const Edge> edges);

  NodeId node_count() const noexcept { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  std::size_t arc_count() const noexcept { return neighbors_.size(); }

  std::uint32_t degree(NodeId v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::uint32_t max_degree() const noexcept { return max_degree_; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  EdgeIndex arc_begin(NodeId v) const noexcept { return offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Arc index of u -> v, or nullopt when the edge does not exist.
  std::optional<EdgeIndex> arc_index(NodeId u, NodeId v) const noexcept;

  /// Every undirected edge once, as (u, v) with u < v, in arc order.
  std::vector<Edge> edges() const;

  bool has_features() const noexcept { return features_.has_value(); }
  const FeatureMatrix& features() const { return *features_; }
  double feature_norm(NodeId v) const noexcept { return feature_norms_[v]; }
  std::span<const double> feature_norms() const noexcept { return feature_norms_; }

  const std::optional<Labels>& labels() const noexcept { return labels_; }

  /// Copy with features attached and norms recomputed; rows must equal node_count.
  Graph with_features(FeatureMatrix features) const;
  Graph with_labels(Labels labels) const;

 private:
  std::vector<EdgeIndex> offsets_;
  std::vector<NodeId> neighbors_;
  std::uint32_t max_degree_ = 0;
  std::optional<FeatureMatrix> features_;
  std::vector<double> feature_norms_;
  std::optional<Labels> labels_;
};

/// Node-induced subgraph with local <-> global id maps.
///
/// Local id i corresponds to global_ids()[i]; global ids are sorted, so the
/// local order preserves the global order.
class Subgraph {
 public:
  Subgraph() = default;

  std::size_t node_count() const noexcept { return global_ids_.size(); }
  std::size_t edge_count() const noexcept { return local_.edge_count(); }

  std::span<const NodeId> global_ids() const noexcept { return global_ids_; }
  NodeId global_id(NodeId local) const noexcept { return global_ids_[local]; }
  std::optional<NodeId> local_id(NodeId global) const noexcept;
  bool contains(NodeId global) const noexcept { return local_id(global).has_value(); }

  /// Adjacency over local ids.
  const Graph& local() const noexcept { return local_; }

  /// Edges as (u, v) global ids with u < v.
  std::vector<Edge> global_edges() const;

  friend bool operator==(const Subgraph& a, const Subgraph& b);

 private:
  friend Subgraph induced_subgraph(const Graph& graph, std::span<const NodeId> nodes);

  std::vector<NodeId> global_ids_;
  Graph local_;
};

/// Node-induced subgraph on `nodes` (duplicates ignored, any order).
/// Throws ParameterError for ids >= graph.node_count().
Subgraph induced_subgraph(const Graph& graph, std::span<const NodeId> nodes);

}  // namespace cpsample
