#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/pipeline.hpp"

namespace minorforge::cli {

/// One estimated quantity compared against its reference value.
struct McRecord {
  std::string suite;
  std::string quantity;
  double estimate = 0;
  double stderr_ = 0;
  double bound = 0;
  bool pass = false;
  // Cell parameters; unset fields are omitted from output.
  std::optional<int> x_size;
  std::optional<double> density;
  std::optional<std::int64_t> f_size;
  std::optional<double> lambda;
  std::int64_t trials = 0;
};

struct McOptions {
  std::int64_t trials = 100'000;
  std::uint64_t seed = 0;
  int jobs = 1;
  int x_size = 10;  // ground set for the pairing suites
  // expectation-bound only
  std::optional<Graph> graph;
  PipelineConfig pipeline;
};

std::vector<std::string> suite_names();

/// Pr[e in M] for a fixed pair, against 1/(|X|-1), pass within 4 SE.
std::vector<McRecord> pairing_marginals(const McOptions& opt);
/// Pr[e, f in M] for fixed disjoint pairs, against 1/((|X|-1)(|X|-3)).
std::vector<McRecord> pairing_joint(const McOptions& opt);
/// Tail Pr[| |F ∩ M| - |F|/(|X|-1) | >= lambda] against |X|/lambda^2 on
/// the grid |X| in {20, 50}, density in {0.1, 0.25}, lambda in {2, 5, 10}.
std::vector<McRecord> chebyshev(const McOptions& opt);
/// Mean missing edges of strict pipeline runs against the expectation
/// bound plus three standard errors. Requires opt.graph.
std::vector<McRecord> expectation_bound(const McOptions& opt);

/// Dispatch by name; throws UnknownSuite.
std::vector<McRecord> run_suite(std::string_view name, const McOptions& opt);

}  // namespace minorforge::cli
