#pragma once

// Brute-force reference implementations used to check the library. They
// are exponential and only meant for small graphs.

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/rng.hpp"

namespace oracle {

using minorforge::Graph;
using minorforge::Vertex;
using minorforge::VertexSet;

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);

bool adjacent_mask(const Graph& g, Vertex v, std::uint32_t mask);
bool is_clique_mask(const Graph& g, std::uint32_t mask);
bool is_independent_mask(const Graph& g, std::uint32_t mask);
bool connected_mask(const Graph& g, std::uint32_t mask);

int alpha(const Graph& g);
int omega(const Graph& g);
/// Lexicographically least maximum clique.
VertexSet lex_max_clique(const Graph& g);

/// k-connected by deleting every vertex set of size < k.
bool k_connected(const Graph& g, int k);
int complement_matching(const Graph& g);
/// Minimum of 2 * cap(C) over all cliques C (including the empty one).
std::int64_t min_twice_capacity(const Graph& g);
/// Maximum number of disjoint induced P3s by recursion on the lowest vertex.
int max_disjoint_seagulls(const Graph& g);

std::int64_t bad_triples(const Graph& g, const VertexSet& z);
std::int64_t bad_quadruples(const Graph& g);

/// Complement of a random triangle-free graph on n vertices with a random
/// number of edges; always has independence number at most two.
Graph random_alpha2(int n, minorforge::Philox& rng);

}  // namespace oracle
