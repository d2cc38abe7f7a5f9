#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/rng.hpp"

namespace minorforge {

// Families of graphs with independence number at most two. Each is the
// complement of a triangle-free graph.

/// Maximal triangle-free graph from the random triangle-free process: all
/// vertex pairs in random order, each inserted unless it closes a triangle.
Graph triangle_free_process(int num_vertices, Philox& rng);

/// Triangle-free process stopped after `max_edges` insertions.
Graph triangle_free_process_partial(int num_vertices, std::int64_t max_edges, Philox& rng);

/// Complement of the maximal triangle-free process graph.
Graph gen_tfp_complement(int num_vertices, Philox& rng);

/// Complement of C5 with every vertex replaced by an independent set of
/// size t (part i = vertices i*t .. i*t+t-1). 5t vertices, clique number 2t.
Graph gen_c5_blowup_complement(int t);

/// Complement of K_{p,q}: disjoint cliques on 0..p-1 and p..p+q-1.
Graph gen_two_clique_complement(int p, int q);

/// Complement of a blow-up of a triangle-free-process graph on `base`
/// vertices, each vertex replaced by an independent set of size t
/// (copies of base vertex i are i*t .. i*t+t-1). The copies are true twins
/// in the result, so its clique number is t times that of the base
/// complement and can be computed on the base.
Graph gen_tfp_blowup_complement(int base, int t, Philox& rng);

/// Replaces each vertex by t copies; copies of a vertex are pairwise
/// non-adjacent, copies of adjacent vertices are completely joined.
Graph blow_up(const Graph& g, int t);

/// Circulant graph on n vertices joining i and i +- s for each s in steps.
Graph circulant(int n, const std::vector<int>& steps);

/// Named graphs:
///   five_wheel                  rim 0-1-2-3-4-0, hub 5
///   c5                          cycle 0-1-2-3-4-0
///   petersen                    outer cycle 0..4, inner pentagram i+5 ~ (i+2)%5+5, spokes i ~ i+5
///   petersen_complement         complement of the above
///   p3                          path 0-1-2
///   k<n>  / k_<n>               complete graph on n vertices
///   circulant13_minus_one_complement
///                               complement of C13{±1,±5} with vertex 12 removed
/// Throws UnknownName.
Graph named(std::string_view name);

std::vector<std::string> named_graph_list();

}  // namespace minorforge
