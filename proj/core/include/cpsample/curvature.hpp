#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpsample/graph.hpp"
#include "cpsample/min_cost_flow.hpp"

namespace cpsample {

/// Number of triangles through edge (u, v): |N(u) ∩ N(v)|.
std::uint32_t triangle_count(const Graph& graph, NodeId u, NodeId v);

/// Closed-form lower bound on the Ollivier-Ricci curvature of an edge from
/// endpoint degrees and the triangle count:
///   -(1 - 1/dx - 1/dy - T/min)_+ - (1 - 1/dx - 1/dy - T/max)_+ + T/max.
/// Throws ContractError when (u, v) is not an edge.
double localized_curvature_bound(const Graph& graph, NodeId u, NodeId v);

/// Shortest-path distance capped at 3. For p in N(u) and q in N(v) of an
/// edge (u, v) the true distance is at most 3 (p-u-v-q), so the cap is exact.
std::uint32_t local_distance(const Graph& graph, NodeId p, NodeId q);

/// Optimal transport between the uniform one-step random-walk measures of u
/// and v (no laziness). Masses are scaled by lcm(d_u, d_v) so that every
/// supply and demand is an integer.
struct TransportProblem {
  std::vector<NodeId> sources;        // N(u)
  std::vector<NodeId> targets;        // N(v)
  std::int64_t scale = 0;             // lcm(d_u, d_v) = total mass
  std::vector<std::int64_t> supply;   // scale / d_u each
  std::vector<std::int64_t> demand;   // scale / d_v each
  std::vector<std::int64_t> cost;     // local_distance, row-major sources x targets
};

TransportProblem build_transport_problem(const Graph& graph, NodeId u, NodeId v);

/// Exact curvature as the rational numerator / denominator, with the
/// optimal plan (in scaled integer units) for inspection.
struct ExactCurvature {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  TransportSolution transport;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// kappa(u, v) = 1 - W1(mu_u, mu_v) for adjacent u, v.
/// Throws ContractError when (u, v) is not an edge.
ExactCurvature exact_orc_detail(const Graph& graph, NodeId u, NodeId v);
double exact_orc(const Graph& graph, NodeId u, NodeId v);

struct EdgeCurvature {
  Edge edge;
  double localized_bound = 0.0;
  std::optional<double> exact;
};

enum class CurvatureMode { kExact, kLocalized };

struct CurvatureOptions {
  CurvatureMode mode = CurvatureMode::kExact;
  unsigned threads = 1;
  /// Allow exact mode on graphs whose max degree exceeds kExactDegreeGuard.
  bool force = false;
  /// Subgraph scope: average per-subgraph means instead of pooling edges.
  bool per_subgraph_mean = false;
};

inline constexpr std::uint32_t kExactDegreeGuard = 10000;

/// Curvature of each listed edge, computed in parallel. Throws
/// ParameterError in exact mode when the degree guard trips.
std::vector<double> edge_curvatures(const Graph& graph, std::span<const Edge> edges,
                                    const CurvatureOptions& options);

struct CurvatureSummary {
  double mean = 0.0;
  std::size_t count = 0;   // edges (or edge occurrences) averaged
  std::size_t skipped_subgraphs = 0;
  /// Each distinct edge evaluated, with its curvature.
  std::vector<Edge> edges;
  std::vector<double> values;
};

/// Mean curvature over every edge of the graph.
CurvatureSummary average_curvature(const Graph& graph, const CurvatureOptions& options);

/// Mean over the edges of the subgraphs, each measured on the parent graph.
/// Pools every edge occurrence by default; subgraphs without edges are
/// skipped. Throws ParameterError when no edge is left.
CurvatureSummary average_curvature(const Graph& graph, std::span<const Subgraph> subgraphs,
                                   const CurvatureOptions& options);

}  // namespace cpsample
