#include "cpsample/samplers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>

#include "cpsample/error.hpp"
#include "cpsample/parallel.hpp"
#include "cpsample/weights.hpp"

namespace cpsample {
namespace {

constexpr std::array<std::pair<SamplingMethod, std::string_view>, 5> kMethodNames{{
    {SamplingMethod::kHisFf, "his-ff"},
    {SamplingMethod::kHisRw, "his-rw"},
    {SamplingMethod::kSaintEdge, "saint-edge"},
    {SamplingMethod::kSaintRw, "saint-rw"},
    {SamplingMethod::kUniformNode, "uniform-node"},
}};

bool is_hierarchical(SamplingMethod m) {
  return m == SamplingMethod::kHisFf || m == SamplingMethod::kHisRw;
}

// Node set under construction: membership flags plus insertion order.
class NodeSet {
 public:
  explicit NodeSet(NodeId node_count) : member_(node_count, 0) {}

  bool contains(NodeId v) const { return member_[v] != 0; }
  std::size_t size() const { return order_.size(); }

  bool insert(NodeId v, NodeOrigin origin, std::vector<std::pair<NodeId, NodeOrigin>>* trace) {
    if (member_[v]) return false;
    member_[v] = 1;
    order_.push_back(v);
    if (trace) trace->emplace_back(v, origin);
    return true;
  }

  const std::vector<NodeId>& nodes() const { return order_; }

 private:
  std::vector<std::uint8_t> member_;
  std::vector<NodeId> order_;
};

void require_partition_matches(const Graph& graph, const CorePeripheryPartition& partition) {
  if (partition.core_count() + partition.periphery_count() != graph.node_count()) {
    throw ParameterError("partition was computed on a different graph");
  }
  if (partition.periphery_count() == 0) throw ParameterError("periphery is empty");
}

// Draws t = <gamma * |N_cor(v)|> core neighbors of v and adds them.
void add_core_neighbors(const Graph& graph, const CorePeripheryPartition& partition, NodeId v,
                        double gamma, Rng& rng, NodeSet& sample,
                        std::vector<std::pair<NodeId, NodeOrigin>>& trace) {
  const auto core = partition.core_neighbors(v);
  const std::size_t t = round_half_up(gamma * static_cast<double>(core.size()));
  if (t == 0) return;
  const auto dist = core_weights(graph, partition, v);
  for (NodeId u : draw_without_replacement(dist, t, rng)) sample.insert(u, NodeOrigin::kCoreDraw, &trace);
}

SampleResult finish(const Graph& graph, const NodeSet& sample, bool truncated,
                    std::vector<std::pair<NodeId, NodeOrigin>> trace = {}) {
  SampleResult result;
  result.subgraph = induced_subgraph(graph, sample.nodes());
  result.truncated = truncated;
  result.trace = std::move(trace);
  return result;
}

SampleResult saint_edge_from_table(const Graph& graph, const SamplerConfig& config,
                                   const std::vector<Edge>& edges,
                                   const std::vector<double>& cumulative, Rng& rng) {
  NodeSet sample(graph.node_count());
  const double total = cumulative.back();
  auto draw_edge = [&] {
    const double r = uniform_unit(rng) * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    if (it == cumulative.end()) --it;
    const Edge& e = edges[static_cast<std::size_t>(it - cumulative.begin())];
    sample.insert(e.u, NodeOrigin::kBaseline, nullptr);
    sample.insert(e.v, NodeOrigin::kBaseline, nullptr);
  };

  bool truncated = false;
  if (config.edge_budget > 0) {
    for (std::uint64_t i = 0; i < config.edge_budget; ++i) draw_edge();
  } else {
    std::size_t reachable = 0;
    for (NodeId v = 0; v < graph.node_count(); ++v) reachable += graph.degree(v) > 0;
    const std::size_t target = std::min(config.sample_size, reachable);
    truncated = target < config.sample_size;
    while (sample.size() < target) draw_edge();
  }
  return finish(graph, sample, truncated);
}

void build_edge_table(const Graph& graph, std::vector<Edge>& edges, std::vector<double>& cumulative) {
  edges = graph.edges();
  cumulative.resize(edges.size());
  double running = 0.0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    running += 1.0 / graph.degree(edges[i].u) + 1.0 / graph.degree(edges[i].v);
    cumulative[i] = running;
  }
}

}  // namespace

std::string_view method_name(SamplingMethod method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "unknown";
}

std::optional<SamplingMethod> parse_method(std::string_view name) {
  for (const auto& [m, n] : kMethodNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

double default_gamma(std::size_t node_count) { return node_count > 100000 ? 0.4 : 1.0; }

std::size_t sample_size_from_rate(std::size_t node_count, double rate) {
  if (!(rate > 0.0 && rate <= 1.0)) throw ParameterError("sampling rate must lie in (0, 1]");
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(node_count * rate)));
}

void validate(const SamplerConfig& config, const Graph& graph) {
  if (config.sample_size < 1) throw ParameterError("sample size must be >= 1");
  if (config.sample_size > graph.node_count()) {
    throw ParameterError("sample size " + std::to_string(config.sample_size) + " exceeds node count " +
                         std::to_string(graph.node_count()));
  }
  if (!(config.gamma > 0.0 && config.gamma <= 1.0)) throw ParameterError("gamma must lie in (0, 1]");
  if (!(config.geometric_p > 0.0 && config.geometric_p < 1.0)) {
    throw ParameterError("geometric p must lie in (0, 1)");
  }
  if (config.method == SamplingMethod::kHisRw && config.walk_length < 1) {
    throw ParameterError("HIS-RW walk length must be >= 1");
  }
  if (config.method == SamplingMethod::kSaintEdge && graph.edge_count() == 0) {
    throw ParameterError("edge sampler needs at least one edge");
  }
}

SampleResult sample_his_ff(const Graph& graph, const CorePeripheryPartition& partition,
                           const SamplerConfig& config, Rng& rng) {
  validate(config, graph);
  require_partition_matches(graph, partition);

  NodeSet sample(graph.node_count());
  std::vector<std::uint8_t> queued(graph.node_count(), 0);
  std::deque<NodeId> queue;
  std::vector<std::pair<NodeId, NodeOrigin>> trace;
  const auto periphery = partition.periphery_nodes();
  const ExclusionFn excluded = [&](NodeId u) { return sample.contains(u) || queued[u] != 0; };

  bool truncated = false;
  while (sample.size() < config.sample_size) {
    NodeOrigin origin = NodeOrigin::kTraversal;
    if (queue.empty()) {
      // Uniform over unvisited periphery nodes: rejection first, then an
      // explicit scan once most of the periphery has been visited.
      std::optional<NodeId> seed;
      for (int attempt = 0; attempt < 32 && !seed; ++attempt) {
        const NodeId w = periphery[uniform_index(rng, periphery.size())];
        if (!sample.contains(w)) seed = w;
      }
      if (!seed) {
        std::vector<NodeId> unvisited;
        for (NodeId w : periphery) {
          if (!sample.contains(w)) unvisited.push_back(w);
        }
        if (unvisited.empty()) {
          truncated = true;
          break;
        }
        seed = unvisited[uniform_index(rng, unvisited.size())];
      }
      queue.push_back(*seed);
      queued[*seed] = 1;
      origin = NodeOrigin::kSeed;
    }

    const NodeId v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    sample.insert(v, origin, &trace);

    add_core_neighbors(graph, partition, v, config.gamma, rng, sample, trace);

    const std::uint32_t burn = draw_burn_count(config.geometric_p, rng);
    if (sample.size() + queue.size() < config.sample_size) {
      const auto dist = periphery_weights(graph, partition, v, excluded);
      for (NodeId u : draw_without_replacement(dist, burn, rng)) {
        queue.push_back(u);
        queued[u] = 1;
      }
    }
  }
  return finish(graph, sample, truncated, std::move(trace));
}

SampleResult sample_his_rw(const Graph& graph, const CorePeripheryPartition& partition,
                           const SamplerConfig& config, Rng& rng) {
  validate(config, graph);
  require_partition_matches(graph, partition);
  if (config.walk_length < 1) throw ParameterError("HIS-RW walk length must be >= 1");

  NodeSet sample(graph.node_count());
  std::vector<std::pair<NodeId, NodeOrigin>> trace;
  const auto periphery = partition.periphery_nodes();
  std::size_t periphery_visited = 0;

  bool truncated = false;
  while (sample.size() < config.sample_size) {
    if (periphery_visited == periphery.size()) {
      truncated = true;  // every periphery node is in; nothing new can be added
      break;
    }
    NodeId v = periphery[uniform_index(rng, periphery.size())];
    for (std::uint32_t step = 1; step <= config.walk_length + 1; ++step) {
      if (!sample.contains(v)) {
        add_core_neighbors(graph, partition, v, config.gamma, rng, sample, trace);
        sample.insert(v, step == 1 ? NodeOrigin::kSeed : NodeOrigin::kTraversal, &trace);
        ++periphery_visited;
      }
      if (step < config.walk_length + 1) {
        const auto dist = periphery_weights(graph, partition, v);
        if (dist.empty()) break;  // dead end: restart from a new seed
        v = draw_one(dist, rng);
      }
    }
  }
  return finish(graph, sample, truncated, std::move(trace));
}

SampleResult sample_saint_edge(const Graph& graph, const SamplerConfig& config, Rng& rng) {
  validate(config, graph);
  std::vector<Edge> edges;
  std::vector<double> cumulative;
  build_edge_table(graph, edges, cumulative);
  return saint_edge_from_table(graph, config, edges, cumulative, rng);
}

SampleResult sample_saint_rw(const Graph& graph, const SamplerConfig& config, Rng& rng) {
  validate(config, graph);
  NodeSet sample(graph.node_count());
  auto walk = [&] {
    NodeId v = uniform_index(rng, graph.node_count());
    sample.insert(v, NodeOrigin::kBaseline, nullptr);
    for (std::uint32_t hop = 0; hop < config.walk_length; ++hop) {
      const auto nbrs = graph.neighbors(v);
      if (nbrs.empty()) break;
      v = nbrs[uniform_index(rng, nbrs.size())];
      sample.insert(v, NodeOrigin::kBaseline, nullptr);
    }
  };
  if (config.roots > 0) {
    for (std::uint32_t r = 0; r < config.roots; ++r) walk();
  } else {
    while (sample.size() < config.sample_size) walk();
  }
  return finish(graph, sample, false);
}

SampleResult sample_uniform_node(const Graph& graph, const SamplerConfig& config, Rng& rng) {
  validate(config, graph);
  std::vector<NodeId> pool(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) pool[v] = v;
  for (std::size_t i = 0; i < config.sample_size; ++i) {
    const std::size_t j = i + uniform_index(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(config.sample_size);
  SampleResult result;
  result.subgraph = induced_subgraph(graph, pool);
  return result;
}

SubgraphSampler::SubgraphSampler(const Graph& graph, const CorePeripheryPartition* partition,
                                 SamplerConfig config)
    : graph_(&graph), partition_(partition), config_(config) {
  validate(config_, graph);
  if (is_hierarchical(config_.method)) {
    if (!partition_) throw ParameterError("hierarchical samplers need a core-periphery partition");
    require_partition_matches(graph, *partition_);
  }
  if (config_.method == SamplingMethod::kSaintEdge) build_edge_table(graph, edges_, cumulative_);
}

SampleResult SubgraphSampler::sample(std::uint64_t index) const {
  Rng rng = stream_rng(config_.seed, index);
  switch (config_.method) {
    case SamplingMethod::kHisFf:
      return sample_his_ff(*graph_, *partition_, config_, rng);
    case SamplingMethod::kHisRw:
      return sample_his_rw(*graph_, *partition_, config_, rng);
    case SamplingMethod::kSaintEdge:
      return saint_edge_from_table(*graph_, config_, edges_, cumulative_, rng);
    case SamplingMethod::kSaintRw:
      return sample_saint_rw(*graph_, config_, rng);
    case SamplingMethod::kUniformNode:
      return sample_uniform_node(*graph_, config_, rng);
  }
  throw ParameterError("unknown sampling method");
}

std::vector<SampleResult> SubgraphSampler::sample_many(std::size_t count, unsigned threads) const {
  std::vector<SampleResult> out(count);
  parallel_for(count, threads, [&](std::size_t i) { out[i] = sample(i); });
  return out;
}

}  // namespace cpsample
