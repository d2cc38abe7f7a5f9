#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/rational.hpp"
#include "minorforge/rng.hpp"

namespace minorforge {

/// Partition of an even ground set into unordered pairs (each stored u < v).
struct Pairing {
  std::vector<Edge> pairs;

  /// Pairs sorted; two pairings are equal iff their canonical forms are.
  Pairing canonical() const;
  bool contains(Edge e) const;
};

/// Uniform over all (|ground| - 1)!! pairings: shuffle, then pair
/// consecutive elements. Throws OddGroundSet.
Pairing sample_uniform_pairing(std::span<const Vertex> ground, Philox& rng);
Pairing sample_uniform_pairing(int x_size, Philox& rng);

/// Number of pairs that are edges of g.
std::int64_t pairing_edge_count(const Pairing& m, const Graph& g);

/// |M ∩ E(g)| >= |E(g)| / (x - 1) - lambda, compared exactly, x = |V(g)|.
bool in_event_A(const Pairing& m, const Graph& g, const Rational& lambda);

struct ConditionedSample {
  Pairing pairing;
  std::int64_t tries = 0;
};

/// Rejection sampling of uniform pairings of V(g) until in_event_A holds
/// and at least `min_edges` pairs are edges; the accepted pairing is
/// uniform on that event. Throws RejectionExhausted after max_tries.
ConditionedSample sample_conditioned(const Graph& g, const Rational& lambda, std::int64_t max_tries, Philox& rng,
                                     std::int64_t min_edges = 0);

/// Uniform `count`-subset of M ∩ E(g), in ascending order. Throws NotEnoughEdges.
std::vector<Edge> subsample_matching(const Pairing& m, const Graph& g, std::int64_t count, Philox& rng);

/// |X| / lambda^2.
double chebyshev_rhs(std::int64_t x_size, double lambda);

}  // namespace minorforge
