#include "cpsample/cli/artifacts.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <memory>
#include <regex>
#include <sstream>

#include "cpsample/error.hpp"

namespace cpsample::cli {
namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out.precision(17);
  return out;
}

std::ifstream open_in(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("file not found: " + path.string());
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return in;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    fields.push_back(field);
  }
  return fields;
}

template <typename T>
T parse_field(const std::string& s, std::size_t line, const fs::path& path) {
  T value{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, path.filename().string() + ": bad field '" + s + "'");
  }
  return value;
}

// Reads a CSV with a fixed header; calls row(fields, line) for each data row.
template <typename Row>
void read_csv(const fs::path& path, const std::string& header, std::size_t columns, Row&& row) {
  auto in = open_in(path);
  std::string line;
  std::size_t n = 0;
  if (!std::getline(in, line) || split_csv(line) != split_csv(header)) {
    throw ParseError(1, path.filename().string() + ": expected header '" + header + "'");
  }
  ++n;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv(line);
    if (fields.size() != columns) throw ParseError(n, path.filename().string() + ": wrong field count");
    row(fields, n);
  }
}

}  // namespace

std::string subgraph_stem(std::size_t index) {
  std::ostringstream os;
  os << "sub_" << std::setw(5) << std::setfill('0') << index;
  return os.str();
}

void write_subgraph(const fs::path& dir, std::size_t index, const Subgraph& subgraph) {
  const std::string stem = subgraph_stem(index);
  {
    auto out = open_out(dir / (stem + ".nodes"));
    for (NodeId v : subgraph.global_ids()) out << v << '\n';
  }
  auto out = open_out(dir / (stem + ".edges"));
  for (const Edge& e : subgraph.local().edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<Subgraph> load_subgraphs(const fs::path& dir_in, const Graph& graph) {
  fs::path dir = dir_in;
  if (fs::is_directory(dir / "subgraphs")) dir = dir / "subgraphs";
  if (!fs::is_directory(dir)) throw IoError("subgraph directory not found: " + dir_in.string());

  static const std::regex pattern(R"(sub_(\d+)\.nodes)");
  std::vector<std::pair<std::size_t, fs::path>> found;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::smatch m;
    const std::string name = entry.path().filename().string();
    if (std::regex_match(name, m, pattern)) found.emplace_back(std::stoull(m[1].str()), entry.path());
  }
  if (found.empty()) throw IoError("no sub_*.nodes files in " + dir.string());
  std::sort(found.begin(), found.end());

  std::vector<Subgraph> out;
  out.reserve(found.size());
  for (const auto& [index, nodes_path] : found) {
    std::vector<NodeId> nodes;
    {
      auto in = open_in(nodes_path);
      std::string line;
      std::size_t n = 0;
      while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto v = parse_field<std::uint64_t>(line, n, nodes_path);
        if (v >= graph.node_count()) throw ParseError(n, nodes_path.filename().string() + ": node id out of range");
        nodes.push_back(static_cast<NodeId>(v));
      }
    }
    Subgraph s = induced_subgraph(graph, nodes);
    if (s.node_count() != nodes.size()) {
      throw ParseError(0, nodes_path.filename().string() + ": duplicate node ids");
    }

    fs::path edges_path = nodes_path;
    edges_path.replace_extension(".edges");
    std::vector<Edge> stored;
    auto in = open_in(edges_path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto space = line.find(' ');
      if (space == std::string::npos) throw ParseError(n, edges_path.filename().string() + ": expected 'i j'");
      NodeId a = parse_field<NodeId>(line.substr(0, space), n, edges_path);
      NodeId b = parse_field<NodeId>(line.substr(space + 1), n, edges_path);
      if (a > b) std::swap(a, b);
      stored.push_back({a, b});
    }
    std::sort(stored.begin(), stored.end());
    if (stored != s.local().edges()) {
      throw ParseError(0, edges_path.filename().string() + ": edges do not match the induced subgraph of this graph");
    }
    out.push_back(std::move(s));
  }
  return out;
}

void write_node_coefficients(const fs::path& path, const FrequencyCounters& counters,
                             const NormCoefficients& coeffs) {
  auto out = open_out(path);
  out << "node_id,C_v,lambda\n";
  for (std::size_t v = 0; v < counters.node_counts.size(); ++v) {
    out << v << ',' << counters.node_counts[v] << ',' << format_double(coeffs.lambda[v]) << '\n';
  }
}

void write_edge_coefficients(const fs::path& path, const Graph& graph, const FrequencyCounters& counters,
                             const NormCoefficients& coeffs) {
  auto out = open_out(path);
  out << "u,v,C_uv,alpha\n";
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const auto nbrs = graph.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const EdgeIndex arc = graph.arc_begin(u) + i;
      if (counters.arc_counts[arc] == 0) continue;
      out << u << ',' << nbrs[i] << ',' << counters.arc_counts[arc] << ',' << format_double(coeffs.alpha[arc])
          << '\n';
    }
  }
}

std::vector<NodeCoefficientRow> read_node_coefficients(const fs::path& path) {
  std::vector<NodeCoefficientRow> rows;
  read_csv(path, "node_id,C_v,lambda", 3, [&](const auto& f, std::size_t n) {
    rows.push_back({parse_field<NodeId>(f[0], n, path), parse_field<std::uint32_t>(f[1], n, path),
                    parse_field<double>(f[2], n, path)});
  });
  return rows;
}

std::vector<EdgeCoefficientRow> read_edge_coefficients(const fs::path& path) {
  std::vector<EdgeCoefficientRow> rows;
  read_csv(path, "u,v,C_uv,alpha", 4, [&](const auto& f, std::size_t n) {
    rows.push_back({parse_field<NodeId>(f[0], n, path), parse_field<NodeId>(f[1], n, path),
                    parse_field<std::uint32_t>(f[2], n, path), parse_field<double>(f[3], n, path)});
  });
  return rows;
}

void write_curve(const fs::path& path, const std::vector<CurvePoint>& points) {
  auto out = open_out(path);
  out << "x,series,value\n";
  for (const auto& p : points) out << format_double(p.x) << ',' << p.series << ',' << format_double(p.value) << '\n';
}

std::vector<CurvePoint> read_curve(const fs::path& path) {
  std::vector<CurvePoint> points;
  read_csv(path, "x,series,value", 3, [&](const auto& f, std::size_t n) {
    points.push_back({parse_field<double>(f[0], n, path), f[1], parse_field<double>(f[2], n, path)});
  });
  return points;
}

void write_edge_values(const fs::path& path, const std::vector<EdgeValue>& rows) {
  auto out = open_out(path);
  out << "u,v,value\n";
  for (const auto& r : rows) out << r.u << ',' << r.v << ',' << format_double(r.value) << '\n';
}

std::vector<EdgeValue> read_edge_values(const fs::path& path) {
  std::vector<EdgeValue> rows;
  read_csv(path, "u,v,value", 3, [&](const auto& f, std::size_t n) {
    rows.push_back({parse_field<NodeId>(f[0], n, path), parse_field<NodeId>(f[1], n, path),
                    parse_field<double>(f[2], n, path)});
  });
  return rows;
}

std::string sha256_file(const fs::path& path) {
  auto in = open_in(path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw Error("sha256 init failed");
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace cpsample::cli
