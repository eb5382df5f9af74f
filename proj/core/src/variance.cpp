#include "cpsample/variance.hpp"

#include <algorithm>

#include "cpsample/error.hpp"
#include "cpsample/parallel.hpp"

namespace cpsample {

VarianceReport aggregation_variance(const Graph& graph, std::span<const Subgraph> subgraphs,
                                    std::span<const DenseMatrix> weights, unsigned threads) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw ParameterError("graph has no nodes");
  std::vector<double> mean(n, 0.0);
  std::vector<double> m2(n, 0.0);
  VarianceReport report;
  report.appearance_counts.assign(n, 0);
  report.curve.reserve(subgraphs.size());

  // Forward passes run in parallel chunks; the Welford updates are applied
  // in subgraph order so results do not depend on the thread count.
  const std::size_t chunk = std::max<std::size_t>(16, std::size_t{4} * std::max(threads, 1u));
  std::vector<std::vector<double>> ys;
  double sum_var = 0.0;
  for (std::size_t start = 0; start < subgraphs.size(); start += chunk) {
    const std::size_t len = std::min(chunk, subgraphs.size() - start);
    ys.assign(len, {});
    parallel_for(len, threads, [&](std::size_t i) {
      const Subgraph& s = subgraphs[start + i];
      ys[i] = forward_pass(s, gather_features(graph, s), weights);
    });
    for (std::size_t i = 0; i < len; ++i) {
      const auto& ids = subgraphs[start + i].global_ids();
      for (std::size_t r = 0; r < ids.size(); ++r) {
        const NodeId v = ids[r];
        if (v >= n) throw ParameterError("subgraph does not belong to this graph");
        const double k_old = report.appearance_counts[v];
        if (k_old > 0) sum_var -= m2[v] / k_old;
        const double k = k_old + 1.0;
        ++report.appearance_counts[v];
        const double delta = ys[i][r] - mean[v];
        mean[v] += delta / k;
        m2[v] += delta * (ys[i][r] - mean[v]);
        sum_var += m2[v] / k;
      }
      report.curve.push_back(std::max(sum_var, 0.0) / static_cast<double>(n));
    }
  }

  report.per_node_var.assign(n, 0.0);
  double total = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    if (report.appearance_counts[v] > 0) {
      report.per_node_var[v] = std::max(m2[v] / report.appearance_counts[v], 0.0);
    }
    total += report.per_node_var[v];
  }
  report.var_avg = total / static_cast<double>(n);
  return report;
}

VarianceReport aggregation_variance(const Graph& graph, std::span<const Subgraph> subgraphs,
                                    const ForwardConfig& config, unsigned threads) {
  const std::size_t input_dim = graph.has_features() ? graph.features().cols() : 1;
  const auto weights = make_weights(input_dim, config);
  return aggregation_variance(graph, subgraphs, weights, threads);
}

}  // namespace cpsample
