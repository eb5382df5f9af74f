#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cpsample/graph.hpp"

namespace cpsample {

/// Simple path a-b-c-d on four distinct nodes, oriented so that a < d.
using Chain = std::array<NodeId, 4>;

struct ChainEnumerationOptions {
  /// Above this many chains, keep a uniform Bernoulli subsample of about
  /// `cap` chains instead of materializing all of them.
  std::uint64_t cap = 100'000'000;
  std::uint64_t seed = 0;
};

struct ChainSet {
  std::uint32_t k = 0;
  std::uint64_t total = 0;       // |P_G(k)|, always exact
  bool sampled = false;          // chains holds a subsample
  std::vector<Chain> chains;
};

/// |P_G(k)|: chains whose four nodes all have degree <= k. Counted without
/// materializing the chains.
std::uint64_t count_chains(const Graph& graph, std::uint32_t k);

/// Every chain of P_G(k) once (or a uniform subsample above the cap).
/// Throws ParameterError when k < 1.
ChainSet enumerate_chains(const Graph& graph, std::uint32_t k, const ChainEnumerationOptions& options = {});

struct ChainReport {
  std::uint32_t k = 0;
  std::size_t n_subgraphs = 0;
  std::uint64_t total_chains = 0;
  std::uint64_t evaluated_chains = 0;  // == total_chains unless sampled
  std::uint64_t preserved = 0;         // among evaluated chains
  bool sampled = false;
  double rate = 0.0;
  /// curve[i] = preservation rate using only the first i + 1 subgraphs.
  std::vector<double> curve;
};

/// Fraction of chains held entirely by at least one subgraph. Throws
/// ParameterError when the chain set is empty (the rate is undefined).
ChainReport chain_preservation_rate(const Graph& graph, const ChainSet& chains,
                                    std::span<const Subgraph> subgraphs);
ChainReport chain_preservation_rate(const Graph& graph, std::uint32_t k,
                                    std::span<const Subgraph> subgraphs,
                                    const ChainEnumerationOptions& options = {});

}  // namespace cpsample
