#include "cpsample/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

#include "cpsample/error.hpp"

namespace cpsample {
namespace {

static_assert(std::endian::native == std::endian::little,
              "binary feature format assumes a little-endian host");

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_separator(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_separator(line[j])) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_float(std::string_view text, float& out) {
  // from_chars for floating point is not available in every libstdc++ we
  // build against; strtof on a bounded copy is equivalent here.
  std::string buf(text);
  char* end = nullptr;
  out = std::strtof(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && !buf.empty();
}

std::ifstream open_input(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw IoError("file not found or unreadable: " + path.string());
  return in;
}

}  // namespace

LoadedGraph parse_edge_list(std::istream& in, const LoadOptions& options) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(strip_comment(line));
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected two node ids, got " + std::to_string(fields.size()) +
                                    " fields");
    }
    std::uint64_t u = 0, v = 0;
    if (!parse_number(fields[0], u) || !parse_number(fields[1], v)) {
      throw ParseError(line_no, "node ids must be non-negative integers");
    }
    raw.emplace_back(u, v);
  }

  std::vector<std::uint64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    if (options.drop_isolated && u == v) continue;
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw ParameterError("edge list contains no edges");
  if (ids.size() > std::numeric_limits<NodeId>::max()) {
    throw ParameterError("too many nodes for 32-bit node ids");
  }

  auto dense = [&](std::uint64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    if (u == v) continue;
    edges.push_back({dense(u), dense(v)});
  }

  LoadedGraph out;
  out.graph = Graph::from_edges(static_cast<NodeId>(ids.size()), edges);
  out.original_ids = std::move(ids);
  if (out.graph.edge_count() == 0) throw ParameterError("edge list contains no edges");
  return out;
}

LoadedGraph load_edge_list(const std::filesystem::path& path, const LoadOptions& options) {
  auto in = open_input(path);
  return parse_edge_list(in, options);
}

void write_edge_list(const std::filesystem::path& path, const Graph& graph) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_id_map(const std::filesystem::path& path, const std::vector<std::uint64_t>& original_ids) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "node_id,original_id\n";
  for (std::size_t i = 0; i < original_ids.size(); ++i) out << i << ',' << original_ids[i] << '\n';
}

FeatureMatrix read_features(const std::filesystem::path& path) {
  if (path.extension() == ".bin") {
    auto in = open_input(path, std::ios::binary);
    std::uint64_t header[2] = {0, 0};
    if (!in.read(reinterpret_cast<char*>(header), sizeof(header))) {
      throw IoError("truncated feature header in " + path.string());
    }
    std::vector<float> values(header[0] * header[1]);
    if (!in.read(reinterpret_cast<char*>(values.data()),
                 static_cast<std::streamsize>(values.size() * sizeof(float)))) {
      throw IoError("truncated feature payload in " + path.string());
    }
    return FeatureMatrix(header[0], header[1], std::move(values));
  }

  auto in = open_input(path);
  std::vector<float> values;
  std::size_t rows = 0, cols = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(strip_comment(line));
    if (fields.empty()) continue;
    if (rows == 0) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw ParseError(line_no, "expected " + std::to_string(cols) + " feature columns");
    }
    for (auto f : fields) {
      float x = 0.0f;
      if (!parse_float(f, x)) throw ParseError(line_no, "bad feature value '" + std::string(f) + "'");
      values.push_back(x);
    }
    ++rows;
  }
  return FeatureMatrix(rows, cols, std::move(values));
}

void write_features_binary(const std::filesystem::path& path, const FeatureMatrix& features) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  const std::uint64_t header[2] = {features.rows(), features.cols()};
  out.write(reinterpret_cast<const char*>(header), sizeof(header));
  out.write(reinterpret_cast<const char*>(features.values().data()),
            static_cast<std::streamsize>(features.values().size() * sizeof(float)));
}

Graph load_features(const std::filesystem::path& path, const Graph& graph) {
  return graph.with_features(read_features(path));
}

Labels read_labels(const std::filesystem::path& path, NodeId node_count, bool multi_class) {
  auto in = open_input(path);
  Labels labels;
  std::string line;
  std::size_t line_no = 0;
  bool seen_row = false;
  if (!multi_class) labels.single.assign(node_count, -1);
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(strip_comment(line));
    if (fields.empty()) continue;
    if (multi_class) {
      std::vector<std::uint8_t> row;
      row.reserve(fields.size());
      for (auto f : fields) {
        unsigned bit = 0;
        if (!parse_number(f, bit) || bit > 1) throw ParseError(line_no, "multi-hot entries must be 0 or 1");
        row.push_back(static_cast<std::uint8_t>(bit));
      }
      labels.multi_hot.push_back(std::move(row));
    } else {
      NodeId node = 0;
      std::int32_t label = 0;
      if (fields.size() != 2 || !parse_number(fields[0], node) || !parse_number(fields[1], label)) {
        if (!seen_row) {  // header
          seen_row = true;
          continue;
        }
        throw ParseError(line_no, "expected node_id,label");
      }
      seen_row = true;
      if (node >= node_count) throw ParseError(line_no, "node id out of range");
      labels.single[node] = label;
    }
  }
  if (multi_class && labels.multi_hot.size() != node_count) {
    throw DimensionError("label rows (" + std::to_string(labels.multi_hot.size()) +
                         ") != node count (" + std::to_string(node_count) + ")");
  }
  return labels;
}

}  // namespace cpsample
