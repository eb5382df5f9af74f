#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cpsample/graph.hpp"
#include "cpsample/partition.hpp"
#include "cpsample/rng.hpp"

namespace cpsample {

/// Finite distribution over node ids. Probabilities sum to 1 unless empty.
struct DiscreteDistribution {
  std::vector<NodeId> support;
  std::vector<double> probabilities;

  bool empty() const noexcept { return support.empty(); }
  std::size_t size() const noexcept { return support.size(); }
};

/// Returns true for nodes that must not be drawn.
using ExclusionFn = std::function<bool(NodeId)>;

/// p(u | v) proportional to ||X(u)|| / sqrt(d_u + 1) over the periphery
/// neighbors of v that are not excluded. Empty when nothing is eligible.
/// Throws ContractError when v is a core node.
DiscreteDistribution periphery_weights(const Graph& graph, const CorePeripheryPartition& partition,
                                       NodeId v, const ExclusionFn& excluded = {});

/// q(u' | v) proportional to ||X(u')|| * sqrt(d_u' + 1) over the core
/// neighbors of v; biased towards high-degree core nodes. Empty when v has no
/// core neighbor. Throws ContractError when v is a core node.
DiscreteDistribution core_weights(const Graph& graph, const CorePeripheryPartition& partition,
                                  NodeId v);

/// Draws min(k, support size) distinct ids by successive renormalized draws
/// (weighted sampling without replacement). Returned in draw order.
std::vector<NodeId> draw_without_replacement(const DiscreteDistribution& dist, std::size_t k,
                                             Rng& rng);

/// One draw from a nonempty distribution.
NodeId draw_one(const DiscreteDistribution& dist, Rng& rng);

/// Geometric on {1, 2, ...} with success probability 1 - p: mean 1 / (1 - p).
std::uint32_t draw_burn_count(double p, Rng& rng);

/// Round half up: 0.5 -> 1, 1.5 -> 2.
std::size_t round_half_up(double x);

}  // namespace cpsample
