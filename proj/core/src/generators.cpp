#include "cpsample/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cpsample/error.hpp"
#include "cpsample/rng.hpp"

namespace cpsample {

Graph generate_ba(NodeId n, std::uint32_t m, std::uint64_t seed) {
  if (m < 1 || n <= m) {
    throw ParameterError("BA model needs n > m >= 1 (n=" + std::to_string(n) +
                         ", m=" + std::to_string(m) + ")");
  }
  Rng rng(mix_seed(seed));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * n);
  std::vector<NodeId> endpoints;  // each node appears once per incident edge
  endpoints.reserve(2 * static_cast<std::size_t>(m) * n);

  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::vector<NodeId> targets;
  targets.reserve(m);
  for (NodeId u = m + 1; u < n; ++u) {
    targets.clear();
    while (targets.size() < m) {
      NodeId t = endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.push_back({u, t});
      endpoints.push_back(u);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph generate_gnp(NodeId n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw ParameterError("edge probability must lie in [0, 1]");
  Rng rng(mix_seed(seed));
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace cpsample
