#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpsample/graph.hpp"
#include "cpsample/partition.hpp"
#include "cpsample/rng.hpp"

namespace cpsample {

enum class SamplingMethod { kHisFf, kHisRw, kSaintEdge, kSaintRw, kUniformNode };

/// "his-ff", "his-rw", "saint-edge", "saint-rw", "uniform-node".
std::string_view method_name(SamplingMethod method);
std::optional<SamplingMethod> parse_method(std::string_view name);

struct SamplerConfig {
  SamplingMethod method = SamplingMethod::kHisFf;
  std::size_t sample_size = 1;  // target node count
  double gamma = 1.0;           // fraction of core neighbors drawn per periphery node
  std::uint32_t walk_length = 2;
  double geometric_p = 0.5;     // HIS-FF burn probability
  // GraphSAINT-RW walker count; 0 launches walkers until sample_size is met.
  std::uint32_t roots = 0;
  // GraphSAINT-Edge draws; 0 draws edges until sample_size is met.
  std::uint64_t edge_budget = 0;
  std::uint64_t seed = 0;
};

/// 0.4 above 100,000 training nodes, 1.0 otherwise.
double default_gamma(std::size_t node_count);

/// floor(node_count * rate), at least 1. Throws unless rate is in (0, 1].
std::size_t sample_size_from_rate(std::size_t node_count, double rate);

/// Throws ParameterError when the config is invalid for this graph.
void validate(const SamplerConfig& config, const Graph& graph);

/// How a node entered a hierarchical sample.
enum class NodeOrigin : std::uint8_t { kSeed, kTraversal, kCoreDraw, kBaseline };

struct SampleResult {
  Subgraph subgraph;
  /// The target size could not be reached (periphery exhausted).
  bool truncated = false;
  /// Insertion order of nodes into the sample with their origin (HIS samplers).
  std::vector<std::pair<NodeId, NodeOrigin>> trace;
};

/// Forest-fire traversal of the periphery with weighted core augmentation.
SampleResult sample_his_ff(const Graph& graph, const CorePeripheryPartition& partition,
                           const SamplerConfig& config, Rng& rng);

/// Random walks on the periphery with weighted core augmentation.
SampleResult sample_his_rw(const Graph& graph, const CorePeripheryPartition& partition,
                           const SamplerConfig& config, Rng& rng);

/// Edges drawn with replacement, p(u, v) proportional to 1/d_u + 1/d_v.
SampleResult sample_saint_edge(const Graph& graph, const SamplerConfig& config, Rng& rng);

/// Uniform roots, each followed by walk_length uniform-neighbor hops.
SampleResult sample_saint_rw(const Graph& graph, const SamplerConfig& config, Rng& rng);

/// sample_size distinct nodes uniformly without replacement.
SampleResult sample_uniform_node(const Graph& graph, const SamplerConfig& config, Rng& rng);

/// Reusable sampler bound to one graph and config. Subgraph i is drawn from
/// stream_rng(config.seed, i), so sample(i) is reproducible in isolation and
/// sample_many gives the same output for any thread count.
class SubgraphSampler {
 public:
  /// `partition` is required for the HIS methods and ignored otherwise; it
  /// must outlive the sampler, as must `graph`.
  SubgraphSampler(const Graph& graph, const CorePeripheryPartition* partition, SamplerConfig config);

  const SamplerConfig& config() const noexcept { return config_; }

  SampleResult sample(std::uint64_t index) const;
  std::vector<SampleResult> sample_many(std::size_t count, unsigned threads = 1) const;

 private:
  const Graph* graph_;
  const CorePeripheryPartition* partition_;
  SamplerConfig config_;
  std::vector<Edge> edges_;          // saint-edge only
  std::vector<double> cumulative_;   // saint-edge only
};

}  // namespace cpsample
