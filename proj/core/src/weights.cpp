#include "cpsample/weights.hpp"

#include <cmath>
#include <numeric>

#include "cpsample/error.hpp"

namespace cpsample {
namespace {

void require_periphery(const CorePeripheryPartition& partition, NodeId v) {
  if (partition.is_core(v)) {
    throw ContractError("node " + std::to_string(v) + " is a core node; expected periphery");
  }
}

void normalize(DiscreteDistribution& dist) {
  const double total = std::accumulate(dist.probabilities.begin(), dist.probabilities.end(), 0.0);
  if (total > 0.0) {
    for (double& p : dist.probabilities) p /= total;
    return;
  }
  // Zero-norm features on every eligible neighbor: fall back to uniform.
  for (double& p : dist.probabilities) p = 1.0 / static_cast<double>(dist.size());
}

}  // namespace

DiscreteDistribution periphery_weights(const Graph& graph, const CorePeripheryPartition& partition,
                                       NodeId v, const ExclusionFn& excluded) {
  require_periphery(partition, v);
  DiscreteDistribution dist;
  for (NodeId u : partition.periphery_neighbors(v)) {
    if (excluded && excluded(u)) continue;
    dist.support.push_back(u);
    dist.probabilities.push_back(graph.feature_norm(u) / std::sqrt(graph.degree(u) + 1.0));
  }
  if (!dist.empty()) normalize(dist);
  return dist;
}

DiscreteDistribution core_weights(const Graph& graph, const CorePeripheryPartition& partition,
                                  NodeId v) {
  require_periphery(partition, v);
  DiscreteDistribution dist;
  for (NodeId u : partition.core_neighbors(v)) {
    dist.support.push_back(u);
    dist.probabilities.push_back(graph.feature_norm(u) * std::sqrt(graph.degree(u) + 1.0));
  }
  if (!dist.empty()) normalize(dist);
  return dist;
}

std::vector<NodeId> draw_without_replacement(const DiscreteDistribution& dist, std::size_t k,
                                             Rng& rng) {
  std::vector<NodeId> out;
  if (k >= dist.size()) {
    // Every element is drawn eventually; only the order would be random and
    // callers use the result as a set.
    out = dist.support;
    return out;
  }
  std::vector<double> remaining = dist.probabilities;
  std::vector<NodeId> ids = dist.support;
  out.reserve(k);
  while (out.size() < k) {
    const double total = std::accumulate(remaining.begin(), remaining.end(), 0.0);
    std::size_t pick = remaining.size() - 1;
    if (total > 0.0) {
      double r = uniform_unit(rng) * total;
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (r < remaining[i]) {
          pick = i;
          break;
        }
        r -= remaining[i];
      }
    } else {
      pick = uniform_index(rng, remaining.size());
    }
    out.push_back(ids[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

NodeId draw_one(const DiscreteDistribution& dist, Rng& rng) {
  double r = uniform_unit(rng);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (r < dist.probabilities[i]) return dist.support[i];
    r -= dist.probabilities[i];
  }
  return dist.support.back();
}

std::uint32_t draw_burn_count(double p, Rng& rng) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("burn probability must lie in (0, 1)");
  return std::geometric_distribution<std::uint32_t>(1.0 - p)(rng) + 1;
}

std::size_t round_half_up(double x) {
  // The slack absorbs products such as 0.3 * 5 landing just below a half.
  return static_cast<std::size_t>(std::floor(x + 0.5 + 1e-9));
}

}  // namespace cpsample
