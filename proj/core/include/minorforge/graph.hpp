#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "minorforge/vertex_set.hpp"

namespace minorforge {

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Duplicate edges are merged; loops and out-of-range endpoints throw InvalidArgument.
  Graph(int vertex_count, std::span<const Edge> edges);
  /// Takes ownership of a prebuilt adjacency; symmetry and irreflexivity are checked.
  explicit Graph(std::vector<VertexSet> adjacency);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbours(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)].size(); }
  /// Degree in the complement.
  int non_degree(Vertex v) const noexcept { return vertex_count() - 1 - degree(v); }

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  std::int64_t edge_count_ = 0;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // new index -> host index, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
/// Empty sets count as disconnected.
bool induces_connected(const Graph& g, const VertexSet& s);

/// Disjoint connected branch sets; one minor vertex per part, in order.
struct BranchDecomposition {
  std::vector<VertexSet> parts;

  int part_count() const noexcept { return static_cast<int>(parts.size()); }
};

/// Throws InvalidDecomposition when parts overlap, are empty, or induce disconnected subgraphs.
Graph contract(const Graph& g, const BranchDecomposition& d);

enum class MinorDefect {
  None,
  PartCountMismatch,
  EmptyPart,
  OverlappingParts,
  DisconnectedPart,
  MissingCrossEdge,
};

std::string_view to_string(MinorDefect d) noexcept;

struct MinorCheck {
  MinorDefect defect = MinorDefect::None;
  int part_a = -1;
  int part_b = -1;

  explicit operator bool() const noexcept { return defect == MinorDefect::None; }
};

/// Independent witness check that d exhibits h as a minor of g.
MinorCheck verify_minor(const Graph& g, const Graph& h, const BranchDecomposition& d);

}  // namespace minorforge
