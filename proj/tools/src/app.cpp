#include "cpsample/cli/app.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>

#include "cpsample/chains.hpp"
#include "cpsample/cli/artifacts.hpp"
#include "cpsample/curvature.hpp"
#include "cpsample/error.hpp"
#include "cpsample/frequency.hpp"
#include "cpsample/generators.hpp"
#include "cpsample/io.hpp"
#include "cpsample/parallel.hpp"
#include "cpsample/partition.hpp"
#include "cpsample/samplers.hpp"
#include "cpsample/variance.hpp"

#ifndef CPSAMPLE_VERSION
#define CPSAMPLE_VERSION "0.0.0"
#endif

namespace cpsample::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Options whose values are file paths; replay resolves them against the
// original working directory.
const std::vector<std::string> kPathFlags{"--graph", "--features", "--subgraphs", "--output"};

struct Globals {
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::string out_dir;
  bool quiet = false;
};

// Collects what a command read and wrote, then writes manifest.json.
class Run {
 public:
  Run(std::string command, const std::vector<std::string>& args, const Globals& globals)
      : command_(std::move(command)), args_(args), globals_(globals), wall_start_(Clock::now()),
        cpu_start_(std::clock()) {}

  const Globals& globals() const { return globals_; }
  bool has_out_dir() const { return !globals_.out_dir.empty(); }

  fs::path out_path(const std::string& name) {
    if (!has_out_dir()) throw ParameterError("--out-dir is required to write " + name);
    fs::create_directories(fs::path(globals_.out_dir) / fs::path(name).parent_path());
    outputs_.push_back(name);
    return fs::path(globals_.out_dir) / name;
  }

  void input(const fs::path& path) {
    inputs_.push_back({{"path", fs::absolute(path).lexically_normal().string()}, {"sha256", sha256_file(path)}});
  }

  json& config() { return config_; }
  json& extra() { return extra_; }

  void finish() {
    if (!has_out_dir()) return;
    const double wall = std::chrono::duration<double>(Clock::now() - wall_start_).count();
    const double cpu = static_cast<double>(std::clock() - cpu_start_) / CLOCKS_PER_SEC;
    json m;
    m["command"] = command_;
    m["args"] = args_;
    m["cwd"] = fs::current_path().string();
    m["config"] = config_;
    m["seed"] = globals_.seed;
    m["threads"] = globals_.threads;
    m["inputs"] = inputs_.is_null() ? json::array() : inputs_;
    m["version"] = CPSAMPLE_VERSION;
    m["timings"] = {{"wall_seconds", wall}, {"cpu_seconds", cpu}};
    m["outputs"] = outputs_;
    for (const auto& [k, v] : extra_.items()) m[k] = v;
    fs::create_directories(globals_.out_dir);
    std::ofstream f(fs::path(globals_.out_dir) / "manifest.json");
    if (!f) throw IoError("cannot write manifest in " + globals_.out_dir);
    f << m.dump(2) << '\n';
  }

 private:
  std::string command_;
  std::vector<std::string> args_;
  Globals globals_;
  Clock::time_point wall_start_;
  std::clock_t cpu_start_;
  json config_ = json::object();
  json extra_ = json::object();
  json inputs_ = json::array();
  std::vector<std::string> outputs_;
};

void write_json(const fs::path& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path.string());
  f << j.dump(2) << '\n';
}

void report(const Globals& g, std::ostream& out, const json& j) {
  if (!g.quiet) out << j.dump(2) << '\n';
}

struct GraphInput {
  std::string graph;
  std::string features;
  bool keep_isolated = false;

  void bind(CLI::App* sub, bool with_features) {
    sub->add_option("--graph", graph, "Edge list file")->required();
    sub->add_flag("--keep-isolated", keep_isolated, "Keep ids that only appear in self-loops");
    if (with_features) sub->add_option("--features", features, "Feature file (.bin or CSV)");
  }

  LoadedGraph load(Run& run) const {
    LoadedGraph lg = load_edge_list(graph, {.drop_isolated = !keep_isolated});
    run.input(graph);
    if (!features.empty()) {
      lg.graph = load_features(features, lg.graph);
      run.input(features);
    }
    run.config()["graph"] = graph;
    if (!features.empty()) run.config()["features"] = features;
    run.config()["keep_isolated"] = keep_isolated;
    return lg;
  }
};

void write_id_map_output(Run& run, const LoadedGraph& lg) {
  if (run.has_out_dir()) write_id_map(run.out_path("node_ids.csv"), lg.original_ids);
}

// --- generate ---------------------------------------------------------------

struct GenerateCmd {
  std::string model = "ba";
  NodeId nodes = 0;
  std::uint32_t m = 2;
  double p = 0.01;
  std::string output;

  void bind(CLI::App* sub) {
    sub->add_option("--model", model, "ba or gnp")->check(CLI::IsMember({"ba", "gnp"}));
    sub->add_option("--nodes", nodes, "Node count")->required();
    sub->add_option("--m", m, "Edges per new node (ba)");
    sub->add_option("--p", p, "Edge probability (gnp)");
    sub->add_option("--output", output, "Edge list path (default: <out-dir>/graph.edges, else stdout)");
  }

  int run(Run& run, std::ostream& out) const {
    const auto& g = run.globals();
    const Graph graph = model == "ba" ? generate_ba(nodes, m, g.seed) : generate_gnp(nodes, p, g.seed);
    run.config() = {{"model", model}, {"nodes", nodes}, {"m", m}, {"p", p}, {"seed", g.seed}};
    fs::path target = output;
    if (target.empty() && run.has_out_dir()) target = run.out_path("graph.edges");
    if (target.empty()) {
      for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
    } else {
      write_edge_list(target, graph);
    }
    run.extra()["edge_count"] = graph.edge_count();
    return kExitOk;
  }
};

// --- partition --------------------------------------------------------------

struct PartitionCmd {
  GraphInput input;
  bool membership = false;

  void bind(CLI::App* sub) {
    input.bind(sub, false);
    sub->add_flag("--membership", membership, "Also write membership.csv (node_id,degree,core)");
  }

  int run(Run& run, std::ostream& out) const {
    const LoadedGraph lg = input.load(run);
    const std::clock_t c0 = std::clock();
    const auto partition = partition_graph(lg.graph);
    const double cpu = static_cast<double>(std::clock() - c0) / CLOCKS_PER_SEC;
    const auto s = partition_stats(partition, lg.graph, cpu);
    json j{{"d_th", s.d_th},
           {"node_count", s.node_count},
           {"edge_count", s.edge_count},
           {"core_count", s.core_count},
           {"vertical_edge_count", s.vertical_edge_count},
           {"core_ratio", s.core_ratio},
           {"vertical_edge_ratio", s.vertical_edge_ratio},
           {"degenerate", s.degenerate},
           {"cpu_seconds", s.cpu_seconds}};
    run.config()["membership"] = membership;
    if (run.has_out_dir()) {
      write_json(run.out_path("partition.json"), j);
      write_id_map_output(run, lg);
      if (membership) {
        std::ofstream f(run.out_path("membership.csv"));
        f << "node_id,degree,core\n";
        for (NodeId v = 0; v < lg.graph.node_count(); ++v) {
          f << v << ',' << lg.graph.degree(v) << ',' << (partition.is_core(v) ? 1 : 0) << '\n';
        }
      }
    } else if (membership) {
      throw ParameterError("--membership needs --out-dir");
    }
    report(run.globals(), out, j);
    return kExitOk;
  }
};

// --- sample -----------------------------------------------------------------

struct SampleCmd {
  GraphInput input;
  std::string method = "his-ff";
  std::optional<double> rate;
  std::optional<std::size_t> size;
  std::size_t count = 100;
  std::optional<double> gamma;
  std::uint32_t walk_length = 2;
  double geometric_p = 0.5;
  std::uint32_t roots = 0;
  std::uint64_t edge_budget = 0;

  void bind(CLI::App* sub) {
    input.bind(sub, true);
    sub->add_option("--method", method, "his-ff, his-rw, saint-edge, saint-rw or uniform-node");
    auto* r = sub->add_option("--rate", rate, "Sample size as a fraction of nodes, in (0, 1]");
    auto* s = sub->add_option("--size", size, "Sample size in nodes");
    r->excludes(s);
    sub->add_option("--count", count, "Number of subgraphs");
    sub->add_option("--gamma", gamma, "Core-neighbor fraction in (0, 1] (default by graph size)");
    sub->add_option("--walk-length", walk_length, "Hops per walk (his-rw, saint-rw)");
    sub->add_option("--geometric-p", geometric_p, "Burn probability for his-ff");
    sub->add_option("--roots", roots, "saint-rw walkers per subgraph (0: until the size is reached)");
    sub->add_option("--edge-budget", edge_budget, "saint-edge draws per subgraph (0: until the size is reached)");
  }

  int run(Run& run, std::ostream& out) const {
    const auto parsed = parse_method(method);
    if (!parsed) throw ParameterError("unknown method '" + method + "'");
    if (!rate && !size) throw ParameterError("one of --rate or --size is required");
    if (count < 1) throw ParameterError("--count must be >= 1");
    const LoadedGraph lg = input.load(run);
    const Graph& graph = lg.graph;

    SamplerConfig config;
    config.method = *parsed;
    config.sample_size = rate ? sample_size_from_rate(graph.node_count(), *rate) : *size;
    config.gamma = gamma ? *gamma : default_gamma(graph.node_count());
    config.walk_length = walk_length;
    config.geometric_p = geometric_p;
    config.roots = roots;
    config.edge_budget = edge_budget;
    config.seed = run.globals().seed;
    validate(config, graph);

    auto& c = run.config();
    c["method"] = method;
    if (rate) c["rate"] = *rate;
    c["sample_size"] = config.sample_size;
    c["count"] = count;
    c["gamma"] = config.gamma;
    c["walk_length"] = config.walk_length;
    c["geometric_p"] = config.geometric_p;
    c["roots"] = config.roots;
    c["edge_budget"] = config.edge_budget;
    c["seed"] = config.seed;

    std::optional<CorePeripheryPartition> partition;
    if (config.method == SamplingMethod::kHisFf || config.method == SamplingMethod::kHisRw) {
      partition = partition_graph(graph);
      c["d_th"] = partition->degree_threshold();
    }
    const SubgraphSampler sampler(graph, partition ? &*partition : nullptr, config);
    const auto results = sampler.sample_many(count, run.globals().threads);

    // Single writer, in index order.
    const fs::path dir = run.out_path("subgraphs");
    fs::create_directories(dir);
    json per = json::array();
    std::vector<Subgraph> subs;
    subs.reserve(results.size());
    std::size_t truncated = 0;
    double total_nodes = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
      write_subgraph(dir, i, results[i].subgraph);
      per.push_back({{"index", i},
                     {"nodes", results[i].subgraph.node_count()},
                     {"edges", results[i].subgraph.edge_count()},
                     {"truncated", results[i].truncated}});
      truncated += results[i].truncated;
      total_nodes += static_cast<double>(results[i].subgraph.node_count());
      subs.push_back(results[i].subgraph);
    }
    const auto counters = accumulate_frequencies(graph, subs);
    const auto coeffs = compute_norm_coefficients(graph, counters);
    write_node_coefficients(run.out_path("coeffs.csv"), counters, coeffs);
    write_edge_coefficients(run.out_path("edge_coeffs.csv"), graph, counters, coeffs);
    write_id_map_output(run, lg);
    run.extra()["subgraphs"] = per;

    report(run.globals(), out,
           {{"count", count},
            {"sample_size", config.sample_size},
            {"mean_nodes", total_nodes / static_cast<double>(count)},
            {"truncated", truncated},
            {"out_dir", run.globals().out_dir}});
    return kExitOk;
  }
};

// --- curvature --------------------------------------------------------------

struct CurvatureCmd {
  GraphInput input;
  std::string mode = "exact";
  std::string scope = "graph";
  std::vector<std::string> scope_args;
  std::string subgraphs;
  bool force = false;
  bool per_subgraph_mean = false;

  void bind(CLI::App* sub) {
    input.bind(sub, false);
    sub->add_option("--mode", mode, "exact or localized")->check(CLI::IsMember({"exact", "localized"}));
    sub->add_option("--scope", scope_args, "graph, or subgraphs followed by the subgraph directory")
        ->expected(1, 2);
    sub->add_option("--subgraphs", subgraphs, "Subgraph directory (same as the --scope subgraphs argument)");
    sub->add_flag("--force", force, "Run exact mode past the degree guard");
    sub->add_flag("--per-subgraph-mean", per_subgraph_mean, "Average per-subgraph means instead of pooling edges");
  }

  void resolve_scope() {
    if (scope_args.empty()) return;
    scope = scope_args[0];
    if (scope != "graph" && scope != "subgraphs") throw ParameterError("--scope must be graph or subgraphs");
    if (scope_args.size() == 2) {
      if (scope == "graph") throw ParameterError("--scope graph takes no directory");
      subgraphs = scope_args[1];
    }
  }

  int run(Run& run, std::ostream& out) {
    resolve_scope();
    if (!subgraphs.empty() && scope_args.empty()) scope = "subgraphs";
    if (scope == "subgraphs" && subgraphs.empty()) throw ParameterError("--scope subgraphs needs a directory");
    const LoadedGraph lg = input.load(run);
    CurvatureOptions options;
    options.mode = mode == "exact" ? CurvatureMode::kExact : CurvatureMode::kLocalized;
    options.threads = run.globals().threads;
    options.force = force;
    options.per_subgraph_mean = per_subgraph_mean;

    CurvatureSummary s;
    std::size_t n_subgraphs = 0;
    if (scope == "graph") {
      s = average_curvature(lg.graph, options);
    } else {
      const auto subs = load_subgraphs(subgraphs, lg.graph);
      n_subgraphs = subs.size();
      record_subgraph_inputs(run, subgraphs);
      s = average_curvature(lg.graph, subs, options);
    }
    run.config() = {{"graph", input.graph}, {"keep_isolated", input.keep_isolated}, {"mode", mode},
                    {"scope", scope},       {"force", force},                        {"per_subgraph_mean", per_subgraph_mean}};
    if (!subgraphs.empty()) run.config()["subgraphs"] = subgraphs;

    json j{{"mode", mode}, {"scope", scope}, {"mean", s.mean}, {"count", s.count}, {"distinct_edges", s.edges.size()}};
    if (scope == "subgraphs") {
      j["subgraphs"] = n_subgraphs;
      j["skipped_subgraphs"] = s.skipped_subgraphs;
    }
    if (run.has_out_dir()) {
      write_json(run.out_path("curvature.json"), j);
      std::vector<EdgeValue> rows(s.edges.size());
      for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = {s.edges[i].u, s.edges[i].v, s.values[i]};
      write_edge_values(run.out_path("edge_curvature.csv"), rows);
    }
    report(run.globals(), out, j);
    return kExitOk;
  }

  static void record_subgraph_inputs(Run& run, const fs::path& dir) {
    fs::path d = dir;
    if (fs::is_directory(d / "subgraphs")) d /= "subgraphs";
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(d)) {
      const auto ext = e.path().extension();
      if (ext == ".nodes" || ext == ".edges") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) run.input(f);
  }
};

// --- chains -----------------------------------------------------------------

struct ChainsCmd {
  GraphInput input;
  std::string subgraphs;
  std::vector<std::uint32_t> ks{20};
  std::uint64_t cap = 100'000'000;

  void bind(CLI::App* sub) {
    input.bind(sub, false);
    sub->add_option("--subgraphs", subgraphs, "Subgraph directory")->required();
    sub->add_option("--k", ks, "Degree cap; repeat for several")->expected(1, -1);
    sub->add_option("--cap", cap, "Materialize at most about this many chains");
  }

  int run(Run& run, std::ostream& out) const {
    const LoadedGraph lg = input.load(run);
    const auto subs = load_subgraphs(subgraphs, lg.graph);
    CurvatureCmd::record_subgraph_inputs(run, subgraphs);
    run.config() = {{"graph", input.graph}, {"keep_isolated", input.keep_isolated}, {"subgraphs", subgraphs},
                    {"k", ks},              {"cap", cap},                           {"seed", run.globals().seed}};

    json reports = json::array();
    std::vector<CurvePoint> curve;
    for (std::uint32_t k : ks) {
      const auto set = enumerate_chains(lg.graph, k, {.cap = cap, .seed = run.globals().seed});
      const auto r = chain_preservation_rate(lg.graph, set, subs);
      reports.push_back({{"k", r.k},
                         {"n", r.n_subgraphs},
                         {"total_chains", r.total_chains},
                         {"evaluated_chains", r.evaluated_chains},
                         {"preserved", r.preserved},
                         {"sampled", r.sampled},
                         {"rate", r.rate}});
      const std::string series = "k=" + std::to_string(k);
      for (std::size_t i = 0; i < r.curve.size(); ++i) curve.push_back({double(i + 1), series, r.curve[i]});
    }
    json j{{"reports", reports}};
    if (run.has_out_dir()) {
      write_json(run.out_path("chains.json"), j);
      write_curve(run.out_path("chains_curve.csv"), curve);
    }
    report(run.globals(), out, j);
    return kExitOk;
  }
};

// --- variance ---------------------------------------------------------------

struct VarianceCmd {
  GraphInput input;
  std::string subgraphs;
  ForwardConfig forward;

  void bind(CLI::App* sub) {
    input.bind(sub, true);
    sub->add_option("--subgraphs", subgraphs, "Subgraph directory")->required();
    sub->add_option("--layers", forward.layers, "GCN layers");
    sub->add_option("--hidden", forward.hidden_dim, "Hidden width");
    sub->add_option("--weight-seed", forward.weight_seed, "Seed for the shared weights");
  }

  int run(Run& run, std::ostream& out) const {
    const LoadedGraph lg = input.load(run);
    const auto subs = load_subgraphs(subgraphs, lg.graph);
    CurvatureCmd::record_subgraph_inputs(run, subgraphs);
    run.config()["subgraphs"] = subgraphs;
    run.config()["layers"] = forward.layers;
    run.config()["hidden"] = forward.hidden_dim;
    run.config()["weight_seed"] = forward.weight_seed;

    const auto r = aggregation_variance(lg.graph, subs, forward, run.globals().threads);
    std::size_t seen = 0;
    for (auto k : r.appearance_counts) seen += k > 0;
    json j{{"var_avg", r.var_avg},
           {"n_subgraphs", subs.size()},
           {"node_count", lg.graph.node_count()},
           {"seen_nodes", seen},
           {"layers", forward.layers},
           {"hidden", forward.hidden_dim},
           {"weight_seed", forward.weight_seed}};
    if (run.has_out_dir()) {
      write_json(run.out_path("variance.json"), j);
      std::ofstream f(run.out_path("node_variance.csv"));
      f << "node_id,k,var\n";
      for (std::size_t v = 0; v < r.per_node_var.size(); ++v) {
        f << v << ',' << r.appearance_counts[v] << ',' << format_double(r.per_node_var[v]) << '\n';
      }
      std::vector<CurvePoint> curve;
      for (std::size_t i = 0; i < r.curve.size(); ++i) curve.push_back({double(i + 1), "var_avg", r.curve[i]});
      write_curve(run.out_path("variance_curve.csv"), curve);
    }
    report(run.globals(), out, j);
    return kExitOk;
  }
};

// --- replay -----------------------------------------------------------------

std::vector<std::string> replay_args(const json& manifest, const std::string& out_dir) {
  const fs::path cwd = manifest.at("cwd").get<std::string>();
  const auto original = manifest.at("args").get<std::vector<std::string>>();
  std::vector<std::string> args;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const std::string& a = original[i];
    if (a == "--out-dir") {
      ++i;
      continue;
    }
    if (a.rfind("--out-dir=", 0) == 0) continue;
    auto resolve = [&](const std::string& v) { return fs::path(v).is_absolute() ? v : (cwd / v).string(); };
    bool handled = false;
    if (a == "--scope" && i + 2 < original.size() && original[i + 1] == "subgraphs" &&
        original[i + 2].rfind("-", 0) != 0) {
      args.insert(args.end(), {a, original[i + 1], resolve(original[i + 2])});
      i += 2;
      continue;
    }
    for (const auto& flag : kPathFlags) {
      if (a == flag && i + 1 < original.size()) {
        args.push_back(a);
        args.push_back(resolve(original[++i]));
        handled = true;
      } else if (a.rfind(flag + "=", 0) == 0) {
        args.push_back(flag + "=" + resolve(a.substr(flag.size() + 1)));
        handled = true;
      }
      if (handled) break;
    }
    if (!handled) args.push_back(a);
  }
  args.insert(args.begin(), {"--out-dir", out_dir});
  return args;
}

int replay(const std::string& manifest_path, std::string out_dir, std::ostream& out, std::ostream& err) {
  if (!fs::exists(manifest_path)) throw IoError("file not found: " + manifest_path);
  std::ifstream f(manifest_path);
  json manifest;
  try {
    manifest = json::parse(f);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("manifest: ") + e.what());
  }
  for (const auto& in : manifest.at("inputs")) {
    const std::string path = in.at("path");
    if (sha256_file(path) != in.at("sha256").get<std::string>()) throw IoError("input changed since the run: " + path);
  }
  if (out_dir.empty()) out_dir = (fs::path(manifest_path).parent_path() / "replay").string();
  return run(replay_args(manifest, out_dir), out, err);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParameterError*>(&e)) return kExitUsage;
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const DimensionError*>(&e) || dynamic_cast<const fs::filesystem_error*>(&e)) {
    return kExitIo;
  }
  return kExitContract;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core-periphery graph sampling toolkit", "cpsample"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CPSAMPLE_VERSION);

  Globals g;
  g.threads = default_thread_count();
  app.add_option("--threads", g.threads, "Worker threads (default: CPSAMPLE_THREADS or hardware)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out-dir", g.out_dir, "Directory for outputs and manifest.json");
  app.add_flag("--quiet", g.quiet, "Suppress the report on stdout");

  GenerateCmd generate;
  PartitionCmd partition;
  SampleCmd sample;
  CurvatureCmd curvature;
  ChainsCmd chains;
  VarianceCmd variance;
  std::string manifest_path;

  auto* sub_generate = app.add_subcommand("generate", "Write a synthetic edge list");
  auto* sub_partition = app.add_subcommand("partition", "Core-periphery partition report");
  auto* sub_sample = app.add_subcommand("sample", "Draw subgraphs and frequency coefficients");
  auto* sub_curvature = app.add_subcommand("curvature", "Ollivier-Ricci curvature of a graph or its subgraphs");
  auto* sub_chains = app.add_subcommand("chains", "Chain preservation rate of a subgraph set");
  auto* sub_variance = app.add_subcommand("variance", "Aggregation variance over a subgraph set");
  auto* sub_replay = app.add_subcommand("replay", "Re-run a command from its manifest");
  generate.bind(sub_generate);
  partition.bind(sub_partition);
  sample.bind(sub_sample);
  curvature.bind(sub_curvature);
  chains.bind(sub_chains);
  variance.bind(sub_variance);
  sub_replay->add_option("--manifest", manifest_path, "manifest.json of the run")->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sub_replay) return replay(manifest_path, g.out_dir, out, err);

    CLI::App* chosen = app.get_subcommands().front();
    Run r(chosen->get_name(), args, g);
    int code = kExitOk;
    if (chosen == sub_generate) code = generate.run(r, out);
    if (chosen == sub_partition) code = partition.run(r, out);
    if (chosen == sub_sample) code = sample.run(r, out);
    if (chosen == sub_curvature) code = curvature.run(r, out);
    if (chosen == sub_chains) code = chains.run(r, out);
    if (chosen == sub_variance) code = variance.run(r, out);
    r.finish();
    return code;
  } catch (const std::exception& e) {
    err << "cpsample: error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace cpsample::cli
