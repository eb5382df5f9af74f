#pragma once

#include <cstdint>

#include "cpsample/graph.hpp"

namespace cpsample {

/// Barabasi-Albert preferential attachment.
///
/// Starts from a clique on m+1 nodes; every later node attaches m edges to
/// distinct existing nodes chosen proportionally to their current degree
/// (uniform draws from the edge-endpoint multiset). The result has
/// m*(n-m-1) + m*(m+1)/2 edges and is a pure function of (n, m, seed).
/// Throws ParameterError unless n > m >= 1.
Graph generate_ba(NodeId n, std::uint32_t m, std::uint64_t seed);

/// Erdos-Renyi G(n, p); used by tests and benchmarks.
Graph generate_gnp(NodeId n, double p, std::uint64_t seed);

}  // namespace cpsample
