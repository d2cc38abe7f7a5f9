#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
/// s != t, capped at `cap` (unit-capacity max flow on the split graph).
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap);

/// |V| > k and no vertex cut of size < k. Every graph is 0-connected.
bool is_k_connected(const Graph& g, int k);

/// A non-adjacent pair joined by fewer than k disjoint paths, if any.
std::optional<std::pair<Vertex, Vertex>> find_separated_pair(const Graph& g, int k);

/// Exact vertex connectivity (n-1 for complete graphs, 0 for disconnected).
int vertex_connectivity(const Graph& g);

/// Maximum matching of a general graph (Edmonds' blossom algorithm).
/// mate[v] is v's partner or -1.
std::vector<Vertex> maximum_matching(const Graph& g);
int maximum_matching_size(const Graph& g);

}  // namespace minorforge
