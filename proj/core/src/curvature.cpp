#include "cpsample/curvature.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cpsample/error.hpp"
#include "cpsample/parallel.hpp"

namespace cpsample {
namespace {

void require_edge(const Graph& graph, NodeId u, NodeId v) {
  if (!graph.has_edge(u, v)) {
    throw ContractError("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  }
}

bool sorted_intersect(std::span<const NodeId> a, std::span<const NodeId> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// Stamped membership marks reused across calls on one thread.
class Marks {
 public:
  void reset(std::size_t n) {
    if (stamp_.size() < n) stamp_.resize(n, 0);
    if (++current_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      current_ = 1;
    }
  }
  void mark(NodeId v) { stamp_[v] = current_; }
  bool marked(NodeId v) const { return stamp_[v] == current_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t current_ = 0;
};

}  // namespace

std::uint32_t triangle_count(const Graph& graph, NodeId u, NodeId v) {
  auto a = graph.neighbors(u);
  auto b = graph.neighbors(v);
  std::uint32_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

double localized_curvature_bound(const Graph& graph, NodeId u, NodeId v) {
  require_edge(graph, u, v);
  const double dx = graph.degree(u);
  const double dy = graph.degree(v);
  const double tri = triangle_count(graph, u, v);
  const double lo = std::min(dx, dy);
  const double hi = std::max(dx, dy);
  const double base = 1.0 - 1.0 / dx - 1.0 / dy;
  return -std::max(base - tri / lo, 0.0) - std::max(base - tri / hi, 0.0) + tri / hi;
}

std::uint32_t local_distance(const Graph& graph, NodeId p, NodeId q) {
  if (p == q) return 0;
  if (graph.has_edge(p, q)) return 1;
  if (sorted_intersect(graph.neighbors(p), graph.neighbors(q))) return 2;
  return 3;
}

TransportProblem build_transport_problem(const Graph& graph, NodeId u, NodeId v) {
  require_edge(graph, u, v);
  TransportProblem tp;
  auto nu = graph.neighbors(u);
  auto nv = graph.neighbors(v);
  tp.sources.assign(nu.begin(), nu.end());
  tp.targets.assign(nv.begin(), nv.end());
  const std::int64_t du = static_cast<std::int64_t>(nu.size());
  const std::int64_t dv = static_cast<std::int64_t>(nv.size());
  tp.scale = std::lcm(du, dv);
  tp.supply.assign(nu.size(), tp.scale / du);
  tp.demand.assign(nv.size(), tp.scale / dv);
  tp.cost.resize(nu.size() * nv.size());

  thread_local Marks marks;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const NodeId p = nu[i];
    marks.reset(graph.node_count());
    for (NodeId x : graph.neighbors(p)) marks.mark(x);
    for (std::size_t j = 0; j < nv.size(); ++j) {
      const NodeId q = nv[j];
      std::int64_t d = 3;
      if (q == p) {
        d = 0;
      } else if (marks.marked(q)) {
        d = 1;
      } else {
        for (NodeId y : graph.neighbors(q)) {
          if (marks.marked(y)) {
            d = 2;
            break;
          }
        }
      }
      tp.cost[i * nv.size() + j] = d;
    }
  }
  return tp;
}

ExactCurvature exact_orc_detail(const Graph& graph, NodeId u, NodeId v) {
  const TransportProblem tp = build_transport_problem(graph, u, v);
  ExactCurvature out;
  out.transport = solve_transport(tp.supply, tp.demand, tp.cost);
  out.numerator = tp.scale - out.transport.cost;
  out.denominator = tp.scale;
  const std::int64_t g = std::gcd(out.numerator, out.denominator);
  if (g > 1) {
    out.numerator /= g;
    out.denominator /= g;
  }
  return out;
}

double exact_orc(const Graph& graph, NodeId u, NodeId v) { return exact_orc_detail(graph, u, v).value(); }

std::vector<double> edge_curvatures(const Graph& graph, std::span<const Edge> edges,
                                    const CurvatureOptions& options) {
  if (options.mode == CurvatureMode::kExact && !options.force &&
      graph.max_degree() > kExactDegreeGuard) {
    throw ParameterError("max degree " + std::to_string(graph.max_degree()) +
                         " exceeds the exact-curvature guard; pass force to override");
  }
  std::vector<double> out(edges.size());
  parallel_for(edges.size(), options.threads, [&](std::size_t i) {
    const Edge& e = edges[i];
    out[i] = options.mode == CurvatureMode::kExact ? exact_orc(graph, e.u, e.v)
                                                   : localized_curvature_bound(graph, e.u, e.v);
  });
  return out;
}

CurvatureSummary average_curvature(const Graph& graph, const CurvatureOptions& options) {
  auto edges = graph.edges();
  if (edges.empty()) throw ParameterError("cannot average curvature over an empty edge set");
  CurvatureSummary s;
  s.values = edge_curvatures(graph, edges, options);
  s.count = s.values.size();
  s.mean = std::accumulate(s.values.begin(), s.values.end(), 0.0) / static_cast<double>(s.count);
  s.edges = std::move(edges);
  return s;
}

CurvatureSummary average_curvature(const Graph& graph, std::span<const Subgraph> subgraphs,
                                   const CurvatureOptions& options) {
  // Each distinct parent edge is evaluated once, then looked up per occurrence.
  std::vector<std::int64_t> slot(graph.arc_count(), -1);
  std::vector<Edge> distinct;
  std::vector<std::vector<std::size_t>> occurrences(subgraphs.size());
  CurvatureSummary s;
  for (std::size_t i = 0; i < subgraphs.size(); ++i) {
    const auto edges = subgraphs[i].global_edges();
    if (edges.empty()) {
      ++s.skipped_subgraphs;
      continue;
    }
    for (const Edge& e : edges) {
      const auto arc = graph.arc_index(e.u, e.v);
      if (!arc) throw ParameterError("subgraph edge missing from the parent graph");
      if (slot[*arc] < 0) {
        slot[*arc] = static_cast<std::int64_t>(distinct.size());
        distinct.push_back(e);
      }
      occurrences[i].push_back(static_cast<std::size_t>(slot[*arc]));
    }
  }
  if (distinct.empty()) throw ParameterError("cannot average curvature over an empty edge set");
  s.values = edge_curvatures(graph, distinct, options);
  const auto& values = s.values;

  double total = 0.0;
  std::size_t used = 0;
  for (const auto& occ : occurrences) {
    if (occ.empty()) continue;
    double sub_total = 0.0;
    for (std::size_t k : occ) sub_total += values[k];
    if (options.per_subgraph_mean) {
      total += sub_total / static_cast<double>(occ.size());
      ++used;
    } else {
      total += sub_total;
      used += occ.size();
    }
    s.count += occ.size();
  }
  s.mean = total / static_cast<double>(used);
  s.edges = std::move(distinct);
  return s;
}

}  // namespace cpsample
