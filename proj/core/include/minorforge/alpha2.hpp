#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Exact value t/2 for integer t.
struct HalfInteger {
  std::int64_t twice = 0;

  static HalfInteger from_int(std::int64_t v) { return {2 * v}; }
  double to_double() const { return static_cast<double>(twice) / 2.0; }
  std::string str() const;  // "5/2", "2", "-1/2"

  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
  friend bool operator<(const HalfInteger& a, std::int64_t b) { return a.twice < 2 * b; }
  friend bool operator>=(const HalfInteger& a, std::int64_t b) { return a.twice >= 2 * b; }
};

/// True iff the complement is triangle-free.
bool is_alpha_le_2(const Graph& g);

/// Vertices of g that are non-adjacent to v (excluding v).
VertexSet non_neighbours(const Graph& g, Vertex v);

struct CliqueStats {
  VertexSet z_clique;
  int k = 0;
  std::int64_t a = 0;  // sum over z in Z of complement degree
  std::int64_t b = 0;  // complement edges with both ends outside Z
};

/// Throws NotAClique.
CliqueStats clique_stats(const Graph& g, const VertexSet& z);

/// (|V - C| + |X|) / 2 where X holds the outside vertices with both a
/// neighbour and a non-neighbour in C. Throws NotAClique.
HalfInteger capacity(const Graph& g, const VertexSet& c);

struct SearchBudget {
  std::int64_t nodes = 5'000'000;
};

struct CapacityMinimum {
  HalfInteger value;   // best (smallest) capacity found
  VertexSet witness;   // clique attaining it
  bool exact = false;  // false when the budget ran out
  std::int64_t nodes = 0;
};

/// Minimum capacity over all cliques, including the empty one.
CapacityMinimum min_capacity(const Graph& g, SearchBudget budget = {});

int complement_matching_size(const Graph& g);

bool is_five_wheel(const Graph& g);

enum class Verdict { Holds, Fails, Undetermined };
std::string_view to_string(Verdict v) noexcept;

/// The five conditions characterising k disjoint seagulls in graphs with
/// independence number at most two. Every condition is evaluated.
struct SeagullConditionReport {
  int k = 0;
  int vertex_count = 0;

  Verdict size = Verdict::Undetermined;          // |V| >= 3k
  Verdict connectivity = Verdict::Undetermined;  // k-connected
  Verdict capacity = Verdict::Undetermined;      // cap(C) >= k for every clique C
  Verdict matching = Verdict::Undetermined;      // complement matching >= k
  Verdict five_wheel = Verdict::Undetermined;    // k == 2 implies not a five-wheel

  std::optional<std::pair<Vertex, Vertex>> separated_pair;  // witness for connectivity failure
  std::optional<VertexSet> low_capacity_clique;             // witness for capacity failure
  int complement_matching = 0;

  bool all_hold() const {
    return size == Verdict::Holds && connectivity == Verdict::Holds && capacity == Verdict::Holds &&
           matching == Verdict::Holds && five_wheel == Verdict::Holds;
  }
  bool any_undetermined() const {
    return size == Verdict::Undetermined || connectivity == Verdict::Undetermined ||
           capacity == Verdict::Undetermined || matching == Verdict::Undetermined ||
           five_wheel == Verdict::Undetermined;
  }
};

/// Throws AlphaTooLarge when g has three pairwise non-adjacent vertices.
SeagullConditionReport seagull_conditions(const Graph& g, int k, SearchBudget budget = {});

}  // namespace minorforge
