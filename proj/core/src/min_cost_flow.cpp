#include "cpsample/min_cost_flow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "cpsample/error.hpp"

namespace cpsample {

MinCostFlow::MinCostFlow(int node_count) : node_count_(node_count), out_(static_cast<std::size_t>(node_count)) {}

int MinCostFlow::add_arc(int from, int to, std::int64_t capacity, std::int64_t cost) {
  if (cost < 0) throw ParameterError("min-cost flow arcs need non-negative cost");
  const int id = static_cast<int>(arcs_.size() / 2);
  out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity, cost});
  out_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0, -cost});
  return id;
}

MinCostFlow::Result MinCostFlow::solve(int source, int sink, std::int64_t limit) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const auto n = static_cast<std::size_t>(node_count_);
  std::vector<std::int64_t> potential(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<int> via(n);
  Result result;

  using Entry = std::pair<std::int64_t, int>;
  while (result.flow < limit) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(via.begin(), via.end(), -1);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[static_cast<std::size_t>(source)] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
      const auto [d, x] = heap.top();
      heap.pop();
      if (d > dist[static_cast<std::size_t>(x)]) continue;
      for (int id : out_[static_cast<std::size_t>(x)]) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.capacity <= 0) continue;
        const std::int64_t nd = d + a.cost + potential[static_cast<std::size_t>(x)] -
                                potential[static_cast<std::size_t>(a.to)];
        if (nd < dist[static_cast<std::size_t>(a.to)]) {
          dist[static_cast<std::size_t>(a.to)] = nd;
          via[static_cast<std::size_t>(a.to)] = id;
          heap.emplace(nd, a.to);
        }
      }
    }
    if (dist[static_cast<std::size_t>(sink)] >= kInf) break;
    for (std::size_t x = 0; x < n; ++x) {
      if (dist[x] < kInf) potential[x] += dist[x];
    }

    std::int64_t push = limit - result.flow;
    for (int x = sink; x != source;) {
      const int id = via[static_cast<std::size_t>(x)];
      push = std::min(push, arcs_[static_cast<std::size_t>(id)].capacity);
      x = arcs_[static_cast<std::size_t>(id ^ 1)].to;
    }
    for (int x = sink; x != source;) {
      const int id = via[static_cast<std::size_t>(x)];
      arcs_[static_cast<std::size_t>(id)].capacity -= push;
      arcs_[static_cast<std::size_t>(id ^ 1)].capacity += push;
      result.cost += push * arcs_[static_cast<std::size_t>(id)].cost;
      x = arcs_[static_cast<std::size_t>(id ^ 1)].to;
    }
    result.flow += push;
  }
  return result;
}

TransportSolution solve_transport(std::span<const std::int64_t> supply,
                                  std::span<const std::int64_t> demand,
                                  std::span<const std::int64_t> cost) {
  const std::size_t rows = supply.size();
  const std::size_t cols = demand.size();
  if (cost.size() != rows * cols) throw DimensionError("transport cost matrix has wrong size");
  const std::int64_t total = std::accumulate(supply.begin(), supply.end(), std::int64_t{0});
  if (total != std::accumulate(demand.begin(), demand.end(), std::int64_t{0})) {
    throw ParameterError("transport problem is unbalanced");
  }

  const int source = 0;
  const int sink = static_cast<int>(rows + cols + 1);
  MinCostFlow flow(static_cast<int>(rows + cols + 2));
  for (std::size_t i = 0; i < rows; ++i) flow.add_arc(source, static_cast<int>(1 + i), supply[i], 0);
  std::vector<int> cell_arc(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      cell_arc[i * cols + j] = flow.add_arc(static_cast<int>(1 + i), static_cast<int>(1 + rows + j),
                                            total, cost[i * cols + j]);
    }
  }
  for (std::size_t j = 0; j < cols; ++j) flow.add_arc(static_cast<int>(1 + rows + j), sink, demand[j], 0);

  const auto result = flow.solve(source, sink, total);
  if (result.flow != total) throw ContractError("transport problem infeasible");

  TransportSolution solution;
  solution.cost = result.cost;
  solution.plan.resize(rows * cols);
  for (std::size_t c = 0; c < rows * cols; ++c) solution.plan[c] = flow.flow(cell_arc[c]);
  return solution;
}

}  // namespace cpsample
