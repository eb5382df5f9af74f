#include "cpsample/forward.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "cpsample/error.hpp"
#include "cpsample/rng.hpp"

namespace cpsample {
namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajor> view(const DenseMatrix& m) {
  return {m.data.data(), static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols)};
}

}  // namespace

std::vector<DenseMatrix> make_weights(std::size_t input_dim, const ForwardConfig& config) {
  if (config.layers < 1) throw ParameterError("forward pass needs at least one layer");
  if (config.hidden_dim < 1) throw ParameterError("hidden_dim must be >= 1");
  if (input_dim < 1) throw ParameterError("input dimension must be >= 1");
  Rng rng(mix_seed(config.weight_seed));
  std::vector<DenseMatrix> weights;
  std::size_t fin = input_dim;
  for (std::uint32_t l = 0; l < config.layers; ++l) {
    const std::size_t fout = config.hidden_dim;
    DenseMatrix w(fin, fout);
    const double a = std::sqrt(6.0 / static_cast<double>(fin + fout));
    for (double& x : w.data) x = (2.0 * uniform_unit(rng) - 1.0) * a;
    weights.push_back(std::move(w));
    fin = fout;
  }
  return weights;
}

DenseMatrix gather_features(const Graph& graph, const Subgraph& subgraph) {
  const auto& ids = subgraph.global_ids();
  if (!graph.has_features()) return DenseMatrix(ids.size(), 1, 1.0);
  const FeatureMatrix& x = graph.features();
  DenseMatrix out(ids.size(), x.cols());
  for (std::size_t r = 0; r < ids.size(); ++r) {
    auto row = x.row(ids[r]);
    for (std::size_t c = 0; c < row.size(); ++c) out.at(r, c) = row[c];
  }
  return out;
}

std::vector<double> forward_pass(const Subgraph& subgraph, const DenseMatrix& features,
                                 std::span<const DenseMatrix> weights) {
  const Graph& g = subgraph.local();
  const std::size_t n = g.node_count();
  if (features.rows != n) throw DimensionError("feature rows do not match subgraph size");
  if (weights.empty()) throw ParameterError("forward pass needs at least one layer");

  std::vector<double> inv_sqrt(n);
  for (NodeId v = 0; v < n; ++v) inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)) + 1.0);

  RowMajor h = view(features);
  for (const DenseMatrix& w : weights) {
    if (w.rows != static_cast<std::size_t>(h.cols())) throw DimensionError("weight shape mismatch");
    const RowMajor hw = h * view(w);
    RowMajor next(hw.rows(), hw.cols());
    for (NodeId v = 0; v < n; ++v) {
      next.row(v) = hw.row(v) * (inv_sqrt[v] * inv_sqrt[v]);
      for (NodeId u : g.neighbors(v)) next.row(v) += hw.row(u) * (inv_sqrt[v] * inv_sqrt[u]);
    }
    h = next.cwiseMax(0.0);
  }

  std::vector<double> norms(n);
  for (NodeId v = 0; v < n; ++v) norms[v] = h.row(v).norm();
  return norms;
}

std::vector<double> forward_pass(const Graph& graph, const Subgraph& subgraph, const ForwardConfig& config) {
  const DenseMatrix x = gather_features(graph, subgraph);
  const auto weights = make_weights(x.cols, config);
  return forward_pass(subgraph, x, weights);
}

}  // namespace cpsample
