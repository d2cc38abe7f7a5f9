#include "minorforge/generators.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

#include "minorforge/error.hpp"

namespace minorforge {

Graph triangle_free_process_partial(int num_vertices, std::int64_t max_edges, Philox& rng) {
  if (num_vertices < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(num_vertices) * static_cast<std::size_t>(num_vertices) / 2);
  for (Vertex u = 0; u < num_vertices; ++u)
    for (Vertex v = u + 1; v < num_vertices; ++v) pairs.push_back({u, v});
  shuffle(std::span<Edge>(pairs), rng);

  std::vector<VertexSet> adj(static_cast<std::size_t>(num_vertices), VertexSet(num_vertices));
  std::int64_t inserted = 0;
  for (const Edge& e : pairs) {
    if (inserted >= max_edges) break;
    auto& au = adj[static_cast<std::size_t>(e.u)];
    auto& av = adj[static_cast<std::size_t>(e.v)];
    if (au.intersects(av)) continue;
    au.insert(e.v);
    av.insert(e.u);
    ++inserted;
  }
  return Graph(std::move(adj));
}

Graph triangle_free_process(int num_vertices, Philox& rng) {
  return triangle_free_process_partial(num_vertices, std::numeric_limits<std::int64_t>::max(), rng);
}

Graph gen_tfp_complement(int num_vertices, Philox& rng) {
  if (num_vertices < 1) throw Error(ErrorCode::InvalidArgument, "need at least one vertex");
  return complement(triangle_free_process(num_vertices, rng));
}

Graph blow_up(const Graph& g, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "blow-up factor must be positive");
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) edges.push_back({e.u * t + i, e.v * t + j});
  return Graph(n * t, edges);
}

Graph circulant(int n, const std::vector<int>& steps) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (int s : steps) {
      const Vertex j = ((i + s) % n + n) % n;
      if (j != i) edges.push_back({std::min(i, j), std::max(i, j)});
    }
  return Graph(n, edges);
}

Graph gen_c5_blowup_complement(int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be at least 1");
  return complement(blow_up(circulant(5, {1}), t));
}

Graph gen_two_clique_complement(int p, int q) {
  if (p < 0 || q < 0) throw Error(ErrorCode::InvalidArgument, "negative part size");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < p + q; ++u)
    for (Vertex v = u + 1; v < p + q; ++v)
      if ((u < p) == (v < p)) edges.push_back({u, v});
  return Graph(p + q, edges);
}

Graph gen_tfp_blowup_complement(int base, int t, Philox& rng) {
  return complement(blow_up(triangle_free_process(base, rng), t));
}

namespace {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
    edges.push_back({i, i + 5});
  }
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  return Graph(10, edges);
}

}  // namespace

Graph named(std::string_view name) {
  if (name == "five_wheel") {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
      edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
      edges.push_back({i, 5});
    }
    return Graph(6, edges);
  }
  if (name == "c5") return circulant(5, {1});
  if (name == "petersen") return petersen();
  if (name == "petersen_complement") return complement(petersen());
  if (name == "p3") {
    const std::vector<Edge> edges{{0, 1}, {1, 2}};
    return Graph(3, edges);
  }
  if (name == "circulant13_minus_one_complement") {
    const Graph c = circulant(13, {1, 5});
    VertexSet keep = VertexSet::full(13);
    keep.erase(12);
    return complement(induced_subgraph(c, keep).graph);
  }
  if (name.size() >= 2 && (name[0] == 'k' || name[0] == 'K')) {
    std::string_view digits = name.substr(1);
    if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size() && n >= 0 && n <= 4096)
      return complete_graph(n);
  }
  throw Error(ErrorCode::UnknownName, "unknown graph '" + std::string(name) + "'");
}

std::vector<std::string> named_graph_list() {
  return {"five_wheel", "c5", "petersen", "petersen_complement", "p3", "k<n>", "circulant13_minus_one_complement"};
}

}  // namespace minorforge
