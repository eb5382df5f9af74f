#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cpsample {

/// Integer min-cost flow by successive shortest augmenting paths with node
/// potentials (Dijkstra on reduced costs). All arc costs must be
/// non-negative so the zero potential is a valid start.
class MinCostFlow {
 public:
  struct Result {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
  };

  explicit MinCostFlow(int node_count);

  /// Returns an arc id usable with flow().
  int add_arc(int from, int to, std::int64_t capacity, std::int64_t cost);

  /// Sends up to `limit` units from source to sink at minimum cost.
  Result solve(int source, int sink, std::int64_t limit);

  std::int64_t flow(int arc) const { return arcs_[static_cast<std::size_t>(2 * arc + 1)].capacity; }

 private:
  struct Arc {
    int to;
    std::int64_t capacity;  // residual
    std::int64_t cost;
  };

  int node_count_;
  std::vector<Arc> arcs_;                 // arc 2k forward, 2k+1 its reverse
  std::vector<std::vector<int>> out_;     // residual arc ids per node
};

/// Balanced transportation problem with integer masses.
struct TransportSolution {
  std::int64_t cost = 0;
  std::vector<std::int64_t> plan;  // rows x cols, row-major
};

/// Requires sum(supply) == sum(demand); costs row-major, rows = supply.size().
TransportSolution solve_transport(std::span<const std::int64_t> supply,
                                  std::span<const std::int64_t> demand,
                                  std::span<const std::int64_t> cost);

}  // namespace cpsample
