#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Induced path a - mid - b (a < b, a and b non-adjacent).
struct Seagull {
  Vertex a;
  Vertex mid;
  Vertex b;
  friend auto operator<=>(const Seagull&, const Seagull&) = default;
};

struct SeagullPartition {
  std::vector<Seagull> triples;
};

/// Some ordering of {x, y, z} induces a three-vertex path.
bool is_seagull(const Graph& g, Vertex x, Vertex y, Vertex z);
/// Canonical orientation of {x, y, z} if it is a seagull.
std::optional<Seagull> orient_seagull(const Graph& g, Vertex x, Vertex y, Vertex z);

struct PackingOptions {
  std::int64_t node_budget = 5'000'000;
  /// Rounds of the matching-based construction tried before backtracking.
  int construction_attempts = 16;
};

/// Partition of V(g) into |V|/3 seagulls. A matching-based construction is
/// tried first (end pairs from a maximum matching of the complement,
/// middles assigned by bipartite matching); when it does not succeed an
/// exact backtracking search decides. nullopt means no partition exists:
/// either the complement has no matching of size |V|/3 or the search was
/// exhaustive. Throws
/// WrongOrder when |V| is not divisible by 3 and BudgetExhausted when the
/// node budget runs out before the question is settled.
std::optional<SeagullPartition> seagull_partition(const Graph& g, const PackingOptions& opts = {});

/// True iff the triples are pairwise disjoint seagulls covering exactly `cover`.
bool is_seagull_partition_of(const Graph& g, const SeagullPartition& p, const VertexSet& cover);

/// Maximum number of disjoint seagulls by memoised exhaustive search.
/// Throws TooLarge above 15 vertices.
int max_disjoint_seagulls_bruteforce(const Graph& g);

/// `s <a> <mid> <b>` per triple, 1-based.
void write_seagulls(std::ostream& out, const SeagullPartition& p);

}  // namespace minorforge
