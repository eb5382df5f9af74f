#include "cpsample/chains.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "cpsample/error.hpp"
#include "cpsample/rng.hpp"

namespace cpsample {
namespace {

std::uint64_t eligible_count(const Graph& graph, NodeId center, NodeId skip, std::uint32_t k) {
  std::uint64_t n = 0;
  for (NodeId x : graph.neighbors(center)) n += x != skip && graph.degree(x) <= k;
  return n;
}

std::uint64_t eligible_common(const Graph& graph, NodeId b, NodeId c, std::uint32_t k) {
  auto a = graph.neighbors(b);
  auto d = graph.neighbors(c);
  std::uint64_t n = 0;
  auto i = a.begin();
  auto j = d.begin();
  while (i != a.end() && j != d.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      n += graph.degree(*i) <= k;
      ++i;
      ++j;
    }
  }
  return n;
}

// Visits each chain once: middle arc b -> c over every ordered pair, ends
// a in N(b), d in N(c), keeping a < d to fix the orientation.
template <typename Visit>
void for_each_chain(const Graph& graph, std::uint32_t k, Visit&& visit) {
  for (NodeId b = 0; b < graph.node_count(); ++b) {
    if (graph.degree(b) > k) continue;
    for (NodeId c : graph.neighbors(b)) {
      if (graph.degree(c) > k) continue;
      for (NodeId a : graph.neighbors(b)) {
        if (a == c || graph.degree(a) > k) continue;
        for (NodeId d : graph.neighbors(c)) {
          if (d == b || d <= a || graph.degree(d) > k) continue;
          visit(Chain{a, b, c, d});
        }
      }
    }
  }
}

}  // namespace

std::uint64_t count_chains(const Graph& graph, std::uint32_t k) {
  // Per ordered middle arc: ends (a, d) with a != d. Each chain is seen from
  // both orientations of its middle edge.
  std::uint64_t ordered = 0;
  for (NodeId b = 0; b < graph.node_count(); ++b) {
    if (graph.degree(b) > k) continue;
    for (NodeId c : graph.neighbors(b)) {
      if (graph.degree(c) > k) continue;
      ordered += eligible_count(graph, b, c, k) * eligible_count(graph, c, b, k) -
                 eligible_common(graph, b, c, k);
    }
  }
  return ordered / 2;
}

ChainSet enumerate_chains(const Graph& graph, std::uint32_t k, const ChainEnumerationOptions& options) {
  if (k < 1) throw ParameterError("chain degree cap k must be >= 1");
  ChainSet set;
  set.k = k;
  set.total = count_chains(graph, k);
  if (set.total <= options.cap) {
    set.chains.reserve(set.total);
    for_each_chain(graph, k, [&](const Chain& c) { set.chains.push_back(c); });
    return set;
  }
  set.sampled = true;
  const double keep = static_cast<double>(options.cap) / static_cast<double>(set.total);
  Rng rng(mix_seed(options.seed));
  set.chains.reserve(options.cap + options.cap / 16);
  for_each_chain(graph, k, [&](const Chain& c) {
    if (uniform_unit(rng) < keep) set.chains.push_back(c);
  });
  return set;
}

ChainReport chain_preservation_rate(const Graph& graph, const ChainSet& chains,
                                    std::span<const Subgraph> subgraphs) {
  if (chains.chains.empty()) throw ParameterError("no chains with degrees <= k; rate undefined");
  const std::size_t n = subgraphs.size();
  const std::size_t words = (n + 63) / 64;

  // membership[v * words + w] bit i: node v is in subgraph i.
  std::vector<std::uint64_t> membership(static_cast<std::size_t>(graph.node_count()) * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (NodeId v : subgraphs[i].global_ids()) {
      if (v >= graph.node_count()) throw ParameterError("subgraph does not belong to this graph");
      membership[static_cast<std::size_t>(v) * words + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }

  // Node-induced subgraphs hold the three path edges whenever they hold the
  // four nodes, so containment reduces to node membership.
  std::vector<std::uint64_t> first_hit(n + 1, 0);
  std::uint64_t preserved = 0;
  for (const Chain& c : chains.chains) {
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t common = membership[c[0] * words + w] & membership[c[1] * words + w] &
                                   membership[c[2] * words + w] & membership[c[3] * words + w];
      if (common) {
        ++first_hit[w * 64 + static_cast<std::size_t>(std::countr_zero(common))];
        ++preserved;
        break;
      }
    }
  }

  ChainReport report;
  report.k = chains.k;
  report.n_subgraphs = n;
  report.total_chains = chains.total;
  report.evaluated_chains = chains.chains.size();
  report.sampled = chains.sampled;
  report.preserved = preserved;
  const double denom = static_cast<double>(chains.chains.size());
  report.rate = static_cast<double>(preserved) / denom;
  report.curve.resize(n);
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < n; ++i) {
    running += first_hit[i];
    report.curve[i] = static_cast<double>(running) / denom;
  }
  return report;
}

ChainReport chain_preservation_rate(const Graph& graph, std::uint32_t k,
                                    std::span<const Subgraph> subgraphs,
                                    const ChainEnumerationOptions& options) {
  return chain_preservation_rate(graph, enumerate_chains(graph, k, options), subgraphs);
}

}  // namespace cpsample
