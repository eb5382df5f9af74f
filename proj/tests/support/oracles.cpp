#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cpsample::oracle {

std::uint64_t vertical_edges_at(const Graph& graph, std::uint32_t d) {
  std::uint64_t count = 0;
  for (const Edge& e : graph.edges()) {
    const bool u_core = graph.degree(e.u) > d;
    const bool v_core = graph.degree(e.v) > d;
    count += u_core != v_core;
  }
  return count;
}

std::uint32_t brute_force_threshold(const Graph& graph) {
  std::uint32_t best = 0;
  std::uint64_t best_count = 0;
  for (std::uint32_t d = 1; d <= graph.max_degree(); ++d) {
    const std::uint64_t c = vertical_edges_at(graph, d);
    if (best == 0 || c > best_count) {
      best = d;
      best_count = c;
    }
  }
  // Nothing separates the degrees: everything is periphery.
  if (best_count == 0) return graph.max_degree();
  return best;
}

std::uint32_t bfs_distance(const Graph& graph, NodeId from, NodeId to) {
  std::vector<std::uint32_t> dist(graph.node_count(), std::numeric_limits<std::uint32_t>::max());
  std::deque<NodeId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    if (x == to) return dist[x];
    for (NodeId y : graph.neighbors(x)) {
      if (dist[y] == std::numeric_limits<std::uint32_t>::max()) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist[to];
}

std::int64_t brute_force_transport(const std::vector<std::int64_t>& supply,
                                   const std::vector<std::int64_t>& demand,
                                   const std::vector<std::int64_t>& cost) {
  const std::size_t rows = supply.size();
  const std::size_t cols = demand.size();
  std::vector<std::int64_t> row_left = supply;
  std::vector<std::int64_t> col_left = demand;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t cell, std::int64_t acc) {
    if (acc >= best) return;
    if (cell == rows * cols) {
      best = acc;
      return;
    }
    const std::size_t i = cell / cols;
    const std::size_t j = cell % cols;
    if (j == cols - 1) {
      // Last cell in a row takes whatever the row has left.
      const std::int64_t x = row_left[i];
      if (x > col_left[j]) return;
      if (i == rows - 1 && col_left[j] != x) return;
      row_left[i] -= x;
      col_left[j] -= x;
      fill(cell + 1, acc + x * cost[cell]);
      row_left[i] += x;
      col_left[j] += x;
      return;
    }
    const std::int64_t hi = std::min(row_left[i], col_left[j]);
    for (std::int64_t x = 0; x <= hi; ++x) {
      if (i == rows - 1 && x != col_left[j]) continue;
      row_left[i] -= x;
      col_left[j] -= x;
      fill(cell + 1, acc + x * cost[cell]);
      row_left[i] += x;
      col_left[j] += x;
    }
  };
  fill(0, 0);
  return best;
}

BruteCurvature brute_force_orc(const Graph& graph, NodeId u, NodeId v) {
  if (!graph.has_edge(u, v)) throw std::invalid_argument("not an edge");
  auto nu = graph.neighbors(u);
  auto nv = graph.neighbors(v);
  const std::int64_t du = static_cast<std::int64_t>(nu.size());
  const std::int64_t dv = static_cast<std::int64_t>(nv.size());
  const std::int64_t scale = std::lcm(du, dv);
  std::vector<std::int64_t> supply(nu.size(), scale / du);
  std::vector<std::int64_t> demand(nv.size(), scale / dv);
  std::vector<std::int64_t> cost;
  for (NodeId p : nu) {
    for (NodeId q : nv) cost.push_back(bfs_distance(graph, p, q));
  }
  return {brute_force_transport(supply, demand, cost), scale};
}

std::set<Chain> brute_force_chains(const Graph& graph, std::uint32_t k) {
  std::set<Chain> out;
  auto ok = [&](NodeId x) { return graph.degree(x) <= k; };
  for (NodeId a = 0; a < graph.node_count(); ++a) {
    if (!ok(a)) continue;
    for (NodeId b : graph.neighbors(a)) {
      if (!ok(b)) continue;
      for (NodeId c : graph.neighbors(b)) {
        if (c == a || !ok(c)) continue;
        for (NodeId d : graph.neighbors(c)) {
          if (d == a || d == b || !ok(d)) continue;
          Chain ch{a, b, c, d};
          if (ch[0] > ch[3]) std::reverse(ch.begin(), ch.end());
          out.insert(ch);
        }
      }
    }
  }
  return out;
}

bool is_node_induced(const Graph& graph, const Subgraph& subgraph) {
  std::set<Edge> expected;
  const auto ids = subgraph.global_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (graph.has_edge(ids[i], ids[j])) expected.insert({std::min(ids[i], ids[j]), std::max(ids[i], ids[j])});
    }
  }
  std::set<Edge> actual;
  for (const Edge& e : subgraph.global_edges()) actual.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  return expected == actual;
}

Graph random_graph(NodeId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_graph_bounded_degree(NodeId n, std::uint32_t max_degree, std::size_t attempts, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> pick(0, n - 1);
  std::vector<std::uint32_t> deg(n, 0);
  std::set<Edge> edges;
  for (std::size_t t = 0; t < attempts; ++t) {
    NodeId u = pick(rng);
    NodeId v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (deg[u] >= max_degree || deg[v] >= max_degree || edges.contains({u, v})) continue;
    edges.insert({u, v});
    ++deg[u];
    ++deg[v];
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

}  // namespace cpsample::oracle
