#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cpsample/graph.hpp"

namespace cpsample {

/// Row-major dense matrix of doubles.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct ForwardConfig {
  std::uint32_t layers = 2;
  std::uint32_t hidden_dim = 64;
  std::uint64_t weight_seed = 0;
};

/// Glorot-uniform weights, one matrix per layer. The first maps input_dim to
/// hidden_dim, the rest are hidden_dim x hidden_dim. Throws ParameterError on
/// zero layers, hidden_dim or input_dim.
std::vector<DenseMatrix> make_weights(std::size_t input_dim, const ForwardConfig& config);

/// Input rows for a subgraph, ordered by local id. Graphs without features
/// get a single constant column of ones.
DenseMatrix gather_features(const Graph& graph, const Subgraph& subgraph);

/// H <- relu(A_hat H W) per layer on the subgraph's own normalized adjacency
/// D^-1/2 (A + I) D^-1/2. Returns the 2-norm of each final row, by local id.
std::vector<double> forward_pass(const Subgraph& subgraph, const DenseMatrix& features,
                                 std::span<const DenseMatrix> weights);
std::vector<double> forward_pass(const Graph& graph, const Subgraph& subgraph, const ForwardConfig& config);

}  // namespace cpsample
