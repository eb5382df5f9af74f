#pragma once

// File formats written and read by the command-line tool.
//
// Subgraph directory: sub_NNNNN.nodes holds the parent node ids (one per
// line, ascending, so line i is local id i); sub_NNNNN.edges holds the local
// edge list "i j" with i < j.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cpsample/frequency.hpp"
#include "cpsample/graph.hpp"

namespace cpsample::cli {

namespace fs = std::filesystem;

std::string subgraph_stem(std::size_t index);

void write_subgraph(const fs::path& dir, std::size_t index, const Subgraph& subgraph);

/// Loads every sub_*.nodes / sub_*.edges pair in index order. Accepts either
/// the directory holding the files or a run directory with a subgraphs/
/// child. Each subgraph is rebuilt on the parent graph and its stored edge
/// list must match the induced edges; otherwise ParseError.
std::vector<Subgraph> load_subgraphs(const fs::path& dir, const Graph& graph);

void write_node_coefficients(const fs::path& path, const FrequencyCounters& counters,
                             const NormCoefficients& coeffs);
void write_edge_coefficients(const fs::path& path, const Graph& graph, const FrequencyCounters& counters,
                             const NormCoefficients& coeffs);

struct NodeCoefficientRow {
  NodeId node = 0;
  std::uint32_t count = 0;
  double lambda = 0.0;
};
struct EdgeCoefficientRow {
  NodeId u = 0;
  NodeId v = 0;
  std::uint32_t count = 0;
  double alpha = 0.0;
};
std::vector<NodeCoefficientRow> read_node_coefficients(const fs::path& path);
std::vector<EdgeCoefficientRow> read_edge_coefficients(const fs::path& path);

/// Tidy plot data: one "x,series,value" row per point.
struct CurvePoint {
  double x = 0.0;
  std::string series;
  double value = 0.0;
};
void write_curve(const fs::path& path, const std::vector<CurvePoint>& points);
std::vector<CurvePoint> read_curve(const fs::path& path);

/// Per-edge values "u,v,value".
struct EdgeValue {
  NodeId u = 0;
  NodeId v = 0;
  double value = 0.0;
};
void write_edge_values(const fs::path& path, const std::vector<EdgeValue>& rows);
std::vector<EdgeValue> read_edge_values(const fs::path& path);

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const fs::path& path);

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

}  // namespace cpsample::cli
