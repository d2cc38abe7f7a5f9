#include "minorforge/graph.hpp"

#include <string>

#include "minorforge/error.hpp"

namespace minorforge {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  adj_.assign(static_cast<std::size_t>(vertex_count), VertexSet(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count)
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u)].insert(e.v);
    adj_[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::int64_t twice = 0;
  for (const auto& a : adj_) twice += a.size();
  edge_count_ = twice / 2;
}

Graph::Graph(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {
  const int n = vertex_count();
  std::int64_t twice = 0;
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet& a = adj_[static_cast<std::size_t>(v)];
    if (a.universe() != n) throw Error(ErrorCode::InvalidArgument, "adjacency universe mismatch");
    if (a.contains(v)) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(v));
    for (Vertex u : a)
      if (!adj_[static_cast<std::size_t>(u)].contains(v))
        throw Error(ErrorCode::InvalidArgument, "asymmetric adjacency");
    twice += a.size();
  }
  edge_count_ = twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v = neighbours(u).next(u + 1); v >= 0; v = neighbours(u).next(v + 1)) out.push_back({u, v});
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> adj;
  adj.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    VertexSet c = g.neighbours(v).complement();
    c.erase(v);
    adj.push_back(std::move(c));
  }
  return Graph(std::move(adj));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_host = s.members();
  const int k = static_cast<int>(out.to_host.size());
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(out.to_host[static_cast<std::size_t>(i)])] = i;
  std::vector<VertexSet> adj(static_cast<std::size_t>(k), VertexSet(k));
  for (int i = 0; i < k; ++i) {
    const VertexSet nb = g.neighbours(out.to_host[static_cast<std::size_t>(i)]) & s;
    for (Vertex u : nb) adj[static_cast<std::size_t>(i)].insert(local[static_cast<std::size_t>(u)]);
  }
  out.graph = Graph(std::move(adj));
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbours(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbours(v).intersects(s)) return false;
  return true;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  const Vertex start = s.first();
  if (start < 0) return false;
  VertexSet seen(s.universe());
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(s.universe());
    for (Vertex v : frontier) next |= g.neighbours(v);
    next &= s;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen == s;
}

namespace {

MinorCheck check_parts(const Graph& g, const BranchDecomposition& d) {
  VertexSet used(g.vertex_count());
  for (int i = 0; i < d.part_count(); ++i) {
    const VertexSet& p = d.parts[static_cast<std::size_t>(i)];
    if (p.universe() != g.vertex_count() || p.empty()) return {MinorDefect::EmptyPart, i, -1};
    if (p.intersects(used)) return {MinorDefect::OverlappingParts, i, -1};
    if (!induces_connected(g, p)) return {MinorDefect::DisconnectedPart, i, -1};
    used |= p;
  }
  return {};
}

std::vector<VertexSet> part_neighbourhoods(const Graph& g, const BranchDecomposition& d) {
  std::vector<VertexSet> reach;
  reach.reserve(d.parts.size());
  for (const VertexSet& p : d.parts) {
    VertexSet r(g.vertex_count());
    for (Vertex v : p) r |= g.neighbours(v);
    reach.push_back(std::move(r));
  }
  return reach;
}

}  // namespace

Graph contract(const Graph& g, const BranchDecomposition& d) {
  if (MinorCheck c = check_parts(g, d); !c)
    throw Error(ErrorCode::InvalidDecomposition,
                std::string(to_string(c.defect)) + " at part " + std::to_string(c.part_a));
  const int k = d.part_count();
  const auto reach = part_neighbourhoods(g, d);
  std::vector<VertexSet> adj(static_cast<std::size_t>(k), VertexSet(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (reach[static_cast<std::size_t>(i)].intersects(d.parts[static_cast<std::size_t>(j)])) {
        adj[static_cast<std::size_t>(i)].insert(j);
        adj[static_cast<std::size_t>(j)].insert(i);
      }
  return Graph(std::move(adj));
}

std::string_view to_string(MinorDefect d) noexcept {
  switch (d) {
    case MinorDefect::None: return "none";
    case MinorDefect::PartCountMismatch: return "part-count-mismatch";
    case MinorDefect::EmptyPart: return "empty-part";
    case MinorDefect::OverlappingParts: return "overlapping-parts";
    case MinorDefect::DisconnectedPart: return "disconnected-part";
    case MinorDefect::MissingCrossEdge: return "missing-cross-edge";
  }
  return "unknown";
}

MinorCheck verify_minor(const Graph& g, const Graph& h, const BranchDecomposition& d) {
  if (d.part_count() != h.vertex_count()) return {MinorDefect::PartCountMismatch, -1, -1};
  if (MinorCheck c = check_parts(g, d); !c) return c;
  // Edge by edge, straight from the definition.
  for (const Edge& e : h.edges()) {
    bool joined = false;
    for (Vertex v : d.parts[static_cast<std::size_t>(e.u)]) {
      if (g.neighbours(v).intersects(d.parts[static_cast<std::size_t>(e.v)])) {
        joined = true;
        break;
      }
    }
    if (!joined) return {MinorDefect::MissingCrossEdge, e.u, e.v};
  }
  return {};
}

}  // namespace minorforge
