#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minorforge/alpha2.hpp"
#include "minorforge/bounds.hpp"
#include "minorforge/clique.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/rational.hpp"
#include "minorforge/seagull.hpp"

namespace minorforge {

// Construction of a |V|/2-vertex minor of a graph with independence number
// at most two: take a maximum clique Z, draw a random pairing of the rest
// conditioned on containing enough edges, keep n - 2k of its edges, split
// the 3k leftover vertices into seagulls, and contract. Every missing edge
// of the minor is traced back to a bad triple or a bad quadruple.

struct LambdaPolicy {
  enum class Kind { N23, Explicit, Clamped };
  Kind kind = Kind::N23;
  Rational value;  // Explicit only

  /// "n23", "clamped", or a positive rational ("12", "7/2", "3.25").
  static LambdaPolicy parse(std::string_view text);
  std::string str() const;
  /// n^(2/3) rounded down to a multiple of 1e-6; Clamped caps it at (k-1)/2.
  Rational resolve(std::int64_t n, std::int64_t k) const;
};

enum class Mode { Strict, Advisory };
std::string_view to_string(Mode m) noexcept;

struct PipelineConfig {
  LambdaPolicy lambda;
  std::uint64_t seed = 0;
  Mode mode = Mode::Strict;
  std::int64_t max_rejection_tries = 100'000;
  CliqueSearchOptions clique;
  PackingOptions packing;
};

struct PreconditionReport {
  int vertex_count = 0;
  std::int64_t n = 0;  // |V| / 2
  std::int64_t k = 0;  // |Z|
  std::int64_t x = 0;  // |V(G')|
  Rational lambda;
  double q = 0;  // 1 - 2n / lambda^2

  bool even_order_at_least_6 = false;
  bool alpha_le_2 = false;
  bool omega_exact = false;           // Z proven to be a maximum clique
  bool omega_below_quarter = false;   // 4k < |V|
  bool lambda_positive = false;
  bool lambda_at_most_half_k_minus_1 = false;  // lambda <= (k-1)/2
  bool lambda_squared_above_2n = false;        // lambda^2 > 2n
  bool n_minus_2k_nonnegative = false;
  int max_non_degree = 0;
  bool non_degree_at_most_k = false;  // every vertex has <= k non-neighbours

  /// Everything the expectation bound needs.
  bool strict_ok() const;
  std::vector<std::string> failed_flags() const;
};

/// Per-instance state shared by every trial.
struct PreparedInstance {
  Graph g;
  PipelineConfig config;
  VertexSet z;
  CliqueStats stats;
  PreconditionReport preconditions;
  InducedSubgraph g_prime;  // G - Z - (parity vertex)
  std::optional<Vertex> deleted_vertex;
  BoundReport bound;
  std::int64_t total_bad_triples = 0;
  std::int64_t total_bad_quadruples = 0;
};

PreconditionReport preconditions(const Graph& g, const PipelineConfig& cfg);

/// G' = g - z, minus the lowest-index vertex outside z when |V - z| is odd.
struct GPrime {
  InducedSubgraph graph;
  std::optional<Vertex> deleted_vertex;
};
GPrime choose_g_prime(const Graph& g, const VertexSet& z);

using Triple = std::array<Vertex, 3>;     // (z, v, w), v < w
using Quadruple = std::array<Vertex, 4>;  // sorted

/// 3-sets with exactly one vertex of z, that vertex non-adjacent to the
/// other two. Throws NotAClique.
std::vector<Triple> enumerate_bad_triples(const Graph& g, const VertexSet& z);
/// 4-sets inducing exactly two disjoint edges.
std::vector<Quadruple> enumerate_bad_quadruples(const Graph& g);
std::int64_t count_bad_quadruples(const Graph& g);

/// Gates both modes share (AlphaTooLarge, Ineligible, InvalidHypotheses);
/// strict mode additionally throws Ineligible when any strict flag fails.
PreparedInstance prepare_instance(Graph g, const PipelineConfig& cfg);

struct PipelineResult {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  Mode mode = Mode::Strict;

  Graph h;
  BranchDecomposition decomposition;  // Z singletons, then M* pairs, then seagulls
  std::optional<Vertex> deleted_vertex;
  std::vector<Edge> m_star;
  SeagullPartition seagulls;
  int s_size = 0;
  std::int64_t rejection_tries = 0;
  std::int64_t pairing_edges = 0;  // |M ∩ E(G')|

  std::int64_t missing_edges = 0;  // C(n,2) - |E(H)|
  std::int64_t realized_bad_triples = 0;
  std::int64_t realized_bad_quadruples = 0;
  std::int64_t unclassified_missing = 0;
  bool accounting_exact = false;
  MinorCheck minor_check;

  BoundReport bound;
  PreconditionReport preconditions;
};

/// One run with its own stream (config seed, trial).
PipelineResult run_trial(const PreparedInstance& inst, std::uint64_t trial);
/// prepare_instance followed by trial 0.
PipelineResult run_pipeline(const Graph& g, const PipelineConfig& cfg);

/// Odd orders: drop vertex 0, build on the rest, add {0} back as a part.
struct AnyOrderResult {
  PipelineResult inner;  // indices of the even-order graph
  std::optional<Vertex> added_vertex;
  Graph h;
  BranchDecomposition decomposition;  // host indices
  MinorCheck minor_check;
};
AnyOrderResult run_pipeline_any_order(const Graph& g, const PipelineConfig& cfg);

enum class CertificateStatus { Sample, Pass, Fail };
std::string_view to_string(CertificateStatus s) noexcept;

struct Certificate {
  CertificateStatus status = CertificateStatus::Sample;
  double bound = 0;
  int trials = 0;
  double mean_missing = 0;
  double standard_error = 0;
  double margin = 0;  // bound + 3 SE - mean (batch) or bound - realized (sample)
};

/// Single runs are marked Sample: the bound concerns an expectation.
/// Throws NotCertifiable for advisory runs or when a strict flag fails.
Certificate certify(const PipelineResult& r);
/// Pass iff mean missing edges <= bound + 3 standard errors.
Certificate certify_batch(std::span<const PipelineResult> runs);

}  // namespace minorforge
