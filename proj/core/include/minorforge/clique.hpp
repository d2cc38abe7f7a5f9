#pragma once

#include <cstdint>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

struct CliqueSearchOptions {
  /// Branch-and-bound node limit shared by the optimisation and the
  /// lexicographic tie-break pass.
  std::int64_t node_budget = 50'000'000;
};

struct CliqueSearchResult {
  VertexSet clique;
  bool proven_maximum = false;  // search finished inside the budget
  bool lex_least = false;       // clique is the lexicographically least maximum clique
  std::int64_t nodes = 0;
  int twin_classes = 0;
};

/// Maximum clique by bitset branch and bound over the true-twin quotient
/// (vertices with equal closed neighbourhoods are merged into weighted
/// classes), seeded with greedy cliques. When the budget runs out the best
/// clique found is returned with proven_maximum == false; the seed always
/// contains a largest non-neighbourhood clique, so for graphs whose
/// complement is triangle-free |clique| >= max non-degree.
CliqueSearchResult find_max_clique(const Graph& g, const CliqueSearchOptions& opts = {});

/// Lexicographically least maximum clique; throws BudgetExhausted when it
/// cannot be proven within the budget.
VertexSet max_clique(const Graph& g, const CliqueSearchOptions& opts = {});

/// Classes of vertices with identical closed neighbourhoods, each sorted,
/// ordered by smallest member.
std::vector<std::vector<Vertex>> true_twin_classes(const Graph& g);

}  // namespace minorforge
