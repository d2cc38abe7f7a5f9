#include "minorforge_cli/app.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "minorforge/alpha2.hpp"
#include "minorforge/bounds.hpp"
#include "minorforge/clique.hpp"
#include "minorforge/connectivity.hpp"
#include "minorforge/error.hpp"
#include "minorforge/generators.hpp"
#include "minorforge/graph_io.hpp"
#include "minorforge/pipeline.hpp"
#include "minorforge/seagull.hpp"
#include "minorforge_cli/mc_suites.hpp"
#include "minorforge_cli/records.hpp"

namespace minorforge::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Records };

struct Input {
  std::string path;
  std::string bytes;
  Graph graph;
};

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  Input result{path, std::string(std::istreambuf_iterator<char>(in), {}), Graph()};
  result.graph = parse_graph(result.bytes);
  return result;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << content;
}

Json one_based(const VertexSet& s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v + 1);
  return a;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json bound_json(const BoundReport& b) {
  Json j;
  j["n"] = b.n;
  j["k"] = b.k;
  j["a"] = b.a;
  j["b"] = b.b;
  j["lambda"] = b.lambda;
  j["p"] = optional_number(b.p);
  j["q"] = b.q;
  j["rhs_J"] = optional_number(b.rhs_J);
  if (!b.rhs_J) j["rhs_J_invalid"] = b.rhs_J_invalid_reason;
  j["z"] = b.z;
  j["zeta"] = b.zeta;
  j["rhs_J2_fraction"] = optional_number(b.rhs_J2_fraction);
  return j;
}

Json preconditions_json(const PreconditionReport& p) {
  Json j;
  j["vertices"] = p.vertex_count;
  j["n"] = p.n;
  j["k"] = p.k;
  j["x"] = p.x;
  j["lambda"] = p.lambda.str();
  j["q"] = p.q;
  j["even_order_at_least_6"] = p.even_order_at_least_6;
  j["alpha_le_2"] = p.alpha_le_2;
  j["omega_exact"] = p.omega_exact;
  j["omega_below_quarter"] = p.omega_below_quarter;
  j["lambda_positive"] = p.lambda_positive;
  j["lambda_at_most_half_k_minus_1"] = p.lambda_at_most_half_k_minus_1;
  j["lambda_squared_above_2n"] = p.lambda_squared_above_2n;
  j["n_minus_2k_nonnegative"] = p.n_minus_2k_nonnegative;
  j["max_non_degree"] = p.max_non_degree;
  j["non_degree_at_most_k"] = p.non_degree_at_most_k;
  j["failed"] = p.failed_flags();
  return j;
}

void emit(std::ostream& out, Format format, const Json& record) {
  if (format == Format::Records) {
    out << record.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : record.items()) {
    if (key == "command") continue;
    fmt::print(out, "{}: {}\n", key, value.is_string() ? value.get<std::string>() : value.dump());
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownName:
    case ErrorCode::UnknownSuite:
    case ErrorCode::OddGroundSet:
      return kInputError;
    case ErrorCode::AlphaTooLarge:
    case ErrorCode::Ineligible:
    case ErrorCode::InvalidHypotheses:
    case ErrorCode::NotCertifiable:
    case ErrorCode::WrongOrder:
      return kIneligible;
    case ErrorCode::RejectionExhausted:
    case ErrorCode::NotEnoughEdges:
      return kSamplerExhausted;
    default:
      return kFailure;
  }
}

// ---- gen ----

struct GenArgs {
  std::string family;
  std::string named;
  int n = 400;
  int t = 1;
  int p = 3;
  int q = 3;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Graph g;
  std::string label;
  if (!a.named.empty()) {
    g = named(a.named);
    label = "named=" + a.named;
  } else {
    Philox rng(a.seed, 0);
    if (a.family == "tfp") {
      g = gen_tfp_complement(a.n, rng);
      label = fmt::format("family=tfp n={} seed={}", a.n, a.seed);
    } else if (a.family == "c5blowup") {
      g = gen_c5_blowup_complement(a.t);
      label = fmt::format("family=c5blowup t={}", a.t);
    } else if (a.family == "twoclique") {
      g = gen_two_clique_complement(a.p, a.q);
      label = fmt::format("family=twoclique p={} q={}", a.p, a.q);
    } else if (a.family == "tfpblowup") {
      g = gen_tfp_blowup_complement(a.n, a.t, rng);
      label = fmt::format("family=tfpblowup n={} t={} seed={}", a.n, a.t, a.seed);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown family " + a.family);
    }
  }
  const std::string text = "c minorforge gen " + label + "\n" + format_graph(g);
  if (a.out.empty())
    out << text;
  else
    write_file(a.out, text);
  return kOk;
}

// ---- analyze ----

struct AnalyzeArgs {
  std::string input;
  std::optional<int> k;
  std::int64_t clique_budget = CliqueSearchOptions{}.node_budget;
  std::int64_t search_budget = SearchBudget{}.nodes;
  bool skip_connectivity = false;
  Format format = Format::Text;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Input in = read_input(a.input);
  const Graph& g = in.graph;
  if (!is_alpha_le_2(g)) throw Error(ErrorCode::AlphaTooLarge, "graph has an independent set of size 3");
  const int nv = g.vertex_count();

  const CliqueSearchResult omega = find_max_clique(g, {a.clique_budget});
  const CliqueStats stats = clique_stats(g, omega.clique);
  const CapacityMinimum cap = min_capacity(g, {a.search_budget});
  int max_non_degree = 0;
  for (Vertex v = 0; v < nv; ++v) max_non_degree = std::max(max_non_degree, g.non_degree(v));

  Json j;
  j["command"] = "analyze";
  j["input"] = in.path;
  j["input_fnv1a"] = fnv1a_hex(in.bytes);
  j["vertices"] = nv;
  j["edges"] = g.edge_count();
  j["alpha_le_2"] = true;
  j["omega"] = stats.k;
  j["omega_proven"] = omega.proven_maximum;
  j["z"] = one_based(omega.clique);
  j["a"] = stats.a;
  j["b"] = stats.b;
  j["max_non_degree"] = max_non_degree;
  j["min_capacity"] = cap.value.str();
  j["min_capacity_exact"] = cap.exact;
  j["min_capacity_clique"] = one_based(cap.witness);
  if (!a.skip_connectivity) j["vertex_connectivity"] = vertex_connectivity(g);
  j["complement_matching"] = complement_matching_size(g);
  j["five_wheel"] = is_five_wheel(g);
  std::string verdict = "pipeline";
  if (nv < 6)
    verdict = "too small for the pipeline";
  else if (4 * stats.k >= nv)
    verdict = "dense-clique route (omega >= |V|/4): a complete minor on |V|/2 vertices exists, not constructed here";
  else if (nv % 2 != 0)
    verdict = "pipeline after dropping a vertex (odd order)";
  j["verdict"] = verdict;

  if (a.k) {
    const SeagullConditionReport r = seagull_conditions(g, *a.k, {a.search_budget});
    Json c;
    c["k"] = r.k;
    c["size"] = to_string(r.size);
    c["connectivity"] = to_string(r.connectivity);
    c["capacity"] = to_string(r.capacity);
    c["matching"] = to_string(r.matching);
    c["five_wheel"] = to_string(r.five_wheel);
    c["all_hold"] = r.all_hold();
    if (r.separated_pair) c["separated_pair"] = {r.separated_pair->first + 1, r.separated_pair->second + 1};
    if (r.low_capacity_clique) c["low_capacity_clique"] = one_based(*r.low_capacity_clique);
    j["seagull_conditions"] = c;
  }
  emit(out, a.format, j);
  return kOk;
}

// ---- build-minor ----

struct BuildArgs {
  std::string input;
  std::string lambda = "n23";
  std::string mode = "strict";
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::int64_t max_tries = PipelineConfig{}.max_rejection_tries;
  std::int64_t clique_budget = CliqueSearchOptions{}.node_budget;
  std::string out_h;
  std::string out_map;
  std::string out_seagulls;
  bool timing = false;
  Format format = Format::Text;
};

Mode parse_mode(const std::string& s) {
  if (s == "strict") return Mode::Strict;
  if (s == "advisory") return Mode::Advisory;
  throw Error(ErrorCode::InvalidArgument, "mode must be strict or advisory");
}

int cmd_build_minor(const BuildArgs& a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Input in = read_input(a.input);
  PipelineConfig cfg;
  cfg.lambda = LambdaPolicy::parse(a.lambda);
  cfg.mode = parse_mode(a.mode);
  cfg.seed = a.seed;
  cfg.max_rejection_tries = a.max_tries;
  cfg.clique.node_budget = a.clique_budget;

  // Odd orders go through the one-vertex wrapper; the run record then
  // describes the even-order inner graph.
  AnyOrderResult any;
  PipelineResult r;
  Graph h;
  BranchDecomposition decomposition;
  MinorCheck check;
  std::optional<Vertex> added;
  if (in.graph.vertex_count() % 2 == 0) {
    r = run_trial(prepare_instance(in.graph, cfg), a.trial);
    h = r.h;
    decomposition = r.decomposition;
    check = r.minor_check;
  } else {
    if (a.trial != 0) throw Error(ErrorCode::InvalidArgument, "--trial needs an even-order graph");
    any = run_pipeline_any_order(in.graph, cfg);
    r = any.inner;
    h = any.h;
    decomposition = any.decomposition;
    check = any.minor_check;
    added = any.added_vertex;
  }

  if (!a.out_h.empty()) write_file(a.out_h, format_graph(h));
  if (!a.out_map.empty()) {
    std::ostringstream s;
    write_branch_map(s, decomposition);
    write_file(a.out_map, s.str());
  }
  if (!a.out_seagulls.empty()) {
    std::ostringstream s;
    write_seagulls(s, r.seagulls);
    write_file(a.out_seagulls, s.str());
  }

  Json j;
  j["command"] = "build-minor";
  j["input"] = in.path;
  j["input_fnv1a"] = fnv1a_hex(in.bytes);
  j["seed"] = r.seed;
  j["trial"] = r.trial;
  j["mode"] = std::string(to_string(r.mode));
  j["lambda_policy"] = cfg.lambda.str();
  j["h_vertices"] = h.vertex_count();
  j["h_edges"] = h.edge_count();
  j["deleted_vertex"] = r.deleted_vertex ? Json(*r.deleted_vertex + 1) : Json(nullptr);
  j["added_vertex"] = added ? Json(*added + 1) : Json(nullptr);
  j["m_star"] = r.m_star.size();
  j["seagulls"] = r.seagulls.triples.size();
  j["s_size"] = r.s_size;
  j["rejection_tries"] = r.rejection_tries;
  j["pairing_edges"] = r.pairing_edges;
  j["missing_edges"] = r.missing_edges;
  j["realized_bad_triples"] = r.realized_bad_triples;
  j["realized_bad_quadruples"] = r.realized_bad_quadruples;
  j["unclassified_missing"] = r.unclassified_missing;
  j["accounting_exact"] = r.accounting_exact;
  j["verify_minor"] = static_cast<bool>(check);
  j["bound"] = bound_json(r.bound);
  j["preconditions"] = preconditions_json(r.preconditions);
  Json cert;
  try {
    const Certificate c = certify(r);
    cert["status"] = std::string(to_string(c.status));
    cert["bound"] = c.bound;
    cert["realized"] = c.mean_missing;
    cert["margin"] = c.margin;
  } catch (const Error& e) {
    cert["status"] = "NotCertifiable";
    cert["reason"] = e.what();
  }
  j["certificate"] = cert;
  if (a.timing)
    j["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(out, a.format, j);
  return check && r.accounting_exact ? kOk : kFailure;
}

// ---- mc ----

struct McArgs {
  std::string suite;
  McOptions options;
  std::string graph;
  std::string lambda = "n23";
  int base = 100;
  int t = 4;
  Format format = Format::Text;
};

int cmd_mc(McArgs a, std::ostream& out) {
  if (a.suite == "expectation-bound") {
    if (!a.graph.empty()) {
      a.options.graph = read_input(a.graph).graph;
    } else {
      Philox rng(a.options.seed, 0);
      a.options.graph = gen_tfp_blowup_complement(a.base, a.t, rng);
    }
    a.options.pipeline.lambda = LambdaPolicy::parse(a.lambda);
  }
  const std::vector<McRecord> records = run_suite(a.suite, a.options);
  bool all = true;
  for (const McRecord& r : records) {
    all = all && r.pass;
    if (a.format == Format::Records) {
      Json j;
      j["command"] = "mc";
      j["suite"] = r.suite;
      j["quantity"] = r.quantity;
      if (r.x_size) j["x"] = *r.x_size;
      if (r.density) j["density"] = *r.density;
      if (r.f_size) j["f_size"] = *r.f_size;
      if (r.lambda) j["lambda"] = *r.lambda;
      j["trials"] = r.trials;
      j["seed"] = a.options.seed;
      j["estimate"] = r.estimate;
      j["stderr"] = r.stderr_;
      j["bound"] = r.bound;
      j["pass"] = r.pass;
      out << j.dump() << '\n';
    } else {
      std::string cell;
      if (r.x_size) cell += fmt::format(" x={}", *r.x_size);
      if (r.density) cell += fmt::format(" density={}", *r.density);
      if (r.lambda) cell += fmt::format(" lambda={}", *r.lambda);
      fmt::print(out, "{} {}{}: estimate {:.6f} (se {:.6f}) bound {:.6f} {}\n", r.suite, r.quantity, cell, r.estimate,
                 r.stderr_, r.bound, r.pass ? "PASS" : "FAIL");
    }
  }
  return all ? kOk : kFailure;
}

// ---- gamma ----

int cmd_gamma(double tolerance, Format format, std::ostream& out) {
  if (!(tolerance > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const GammaResult r = gamma_optimize(tolerance);
  if (format == Format::Records) {
    Json j;
    j["command"] = "gamma";
    j["tolerance"] = tolerance;
    j["z_star"] = r.z_star;
    j["f_max"] = r.f_max;
    j["gamma"] = r.gamma;
    out << j.dump() << '\n';
  } else {
    fmt::print(out, "z_star {:.6f}\ngamma {:.6f}\n", r.z_star, r.gamma);
  }
  return kOk;
}

Format parse_format(const std::string& s) { return s == "records" ? Format::Records : Format::Text; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dense minors of graphs with independence number at most two", "minorforge"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "records"};
  std::string format = "text";

  std::uint64_t seed = 0;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "64-bit master seed")->envname("MINORFORGE_SEED");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  };

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a graph with independence number at most two");
  auto* family = gen_cmd->add_option("--family", gen.family, "tfp | c5blowup | twoclique | tfpblowup")
                     ->check(CLI::IsMember({"tfp", "c5blowup", "twoclique", "tfpblowup"}));
  gen_cmd->add_option("--named", gen.named, "Named graph")->excludes(family);
  gen_cmd->add_option("--n", gen.n, "Vertices (tfp) or base vertices (tfpblowup)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--t", gen.t, "Blow-up factor")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen.p, "First clique (twoclique)")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--q", gen.q, "Second clique (twoclique)")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  add_seed(gen_cmd);

  AnalyzeArgs analyze;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Structural report for a graph file");
  analyze_cmd->add_option("graph", analyze.input, "Graph file")->required();
  analyze_cmd->add_option("--k", analyze.k, "Also evaluate the k-seagull conditions")->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--clique-budget", analyze.clique_budget, "Clique search node budget");
  analyze_cmd->add_option("--search-budget", analyze.search_budget, "Capacity search node budget");
  analyze_cmd->add_flag("--skip-connectivity", analyze.skip_connectivity, "Omit vertex connectivity");
  add_format(analyze_cmd);

  BuildArgs build;
  CLI::App* build_cmd = app.add_subcommand("build-minor", "Construct the |V|/2-vertex minor");
  build_cmd->add_option("graph", build.input, "Graph file")->required();
  build_cmd->add_option("--lambda", build.lambda, "n23 | clamped | positive rational");
  build_cmd->add_option("--mode", build.mode, "strict | advisory")->check(CLI::IsMember({"strict", "advisory"}));
  build_cmd->add_option("--trial", build.trial, "Trial index (RNG stream)");
  build_cmd->add_option("--max-tries", build.max_tries, "Rejection sampling limit")->check(CLI::PositiveNumber);
  build_cmd->add_option("--clique-budget", build.clique_budget, "Clique search node budget");
  build_cmd->add_option("--out-h", build.out_h, "Write the minor H");
  build_cmd->add_option("--out-map", build.out_map, "Write the branch map");
  build_cmd->add_option("--out-seagulls", build.out_seagulls, "Write the seagull partition");
  build_cmd->add_flag("--timing", build.timing, "Add wall time to the record");
  add_seed(build_cmd);
  add_format(build_cmd);

  McArgs mc;
  CLI::App* mc_cmd = app.add_subcommand("mc", "Monte Carlo suites");
  mc_cmd->add_option("suite", mc.suite, "pairing-marginals | pairing-joint | chebyshev | expectation-bound")
      ->required();
  mc_cmd->add_option("--trials", mc.options.trials, "Samples per cell")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--jobs", mc.options.jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  mc_cmd->add_option("--x", mc.options.x_size, "Ground set size for the pairing suites");
  mc_cmd->add_option("--graph", mc.graph, "Graph for expectation-bound");
  mc_cmd->add_option("--base", mc.base, "Base order of the generated expectation-bound graph");
  mc_cmd->add_option("--t", mc.t, "Blow-up factor of the generated expectation-bound graph");
  mc_cmd->add_option("--lambda", mc.lambda, "n23 | clamped | positive rational");
  add_seed(mc_cmd);
  add_format(mc_cmd);

  double tolerance = 1e-7;
  CLI::App* gamma_cmd = app.add_subcommand("gamma", "Density constant and its maximiser");
  gamma_cmd->add_option("--tolerance", tolerance, "Golden-section bracket width");
  add_format(gamma_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gen_cmd->parsed()) {
      if (gen.family.empty() && gen.named.empty()) throw Error(ErrorCode::InvalidArgument, "need --family or --named");
      gen.seed = seed;
      return cmd_gen(gen, out);
    }
    if (analyze_cmd->parsed()) {
      analyze.format = parse_format(format);
      return cmd_analyze(analyze, out);
    }
    if (build_cmd->parsed()) {
      build.seed = seed;
      build.format = parse_format(format);
      return cmd_build_minor(build, out);
    }
    if (mc_cmd->parsed()) {
      mc.options.seed = seed;
      mc.format = parse_format(format);
      return cmd_mc(mc, out);
    }
    if (gamma_cmd->parsed()) return cmd_gamma(tolerance, parse_format(format), out);
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kFailure;
  }
  return kFailure;
}

}  // namespace minorforge::cli
