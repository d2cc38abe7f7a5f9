#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace oracle {

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<minorforge::Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, list);
}

Graph cycle(int n) {
  std::vector<minorforge::Edge> list;
  for (int i = 0; i < n; ++i) list.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Graph(n, list);
}

Graph path(int n) {
  std::vector<minorforge::Edge> list;
  for (int i = 0; i + 1 < n; ++i) list.push_back({i, i + 1});
  return Graph(n, list);
}

Graph complete(int n) {
  std::vector<minorforge::Edge> list;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) list.push_back({i, j});
  return Graph(n, list);
}

namespace {

std::uint32_t neighbour_mask(const Graph& g, Vertex v) {
  std::uint32_t m = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (g.adjacent(u, v)) m |= 1U << u;
  return m;
}

}  // namespace

bool adjacent_mask(const Graph& g, Vertex v, std::uint32_t mask) { return (neighbour_mask(g, v) & mask) != 0; }

bool is_clique_mask(const Graph& g, std::uint32_t mask) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if ((mask >> u & 1U) && (mask >> v & 1U) && !g.adjacent(u, v)) return false;
  return true;
}

bool is_independent_mask(const Graph& g, std::uint32_t mask) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if ((mask >> u & 1U) && (mask >> v & 1U) && g.adjacent(u, v)) return false;
  return true;
}

bool connected_mask(const Graph& g, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t seen = mask & (~mask + 1);
  for (;;) {
    std::uint32_t grown = seen;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (seen >> v & 1U) grown |= neighbour_mask(g, v) & mask;
    if (grown == seen) break;
    seen = grown;
  }
  return seen == mask;
}

int alpha(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t m = 0; m < (1U << n); ++m)
    if (std::popcount(m) > best && is_independent_mask(g, m)) best = std::popcount(m);
  return best;
}

int omega(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t m = 0; m < (1U << n); ++m)
    if (std::popcount(m) > best && is_clique_mask(g, m)) best = std::popcount(m);
  return best;
}

VertexSet lex_max_clique(const Graph& g) {
  const int n = g.vertex_count();
  const int w = omega(g);
  std::vector<int> pick;
  std::vector<int> best;
  // Combinations in lexicographic order; the first clique found wins.
  std::function<bool(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == w) {
      std::uint32_t m = 0;
      for (int v : pick) m |= 1U << v;
      if (is_clique_mask(g, m)) {
        best = pick;
        return true;
      }
      return false;
    }
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      if (rec(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(0);
  VertexSet s(n);
  for (int v : best) s.insert(v);
  return s;
}

bool k_connected(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n <= k) return false;
  const std::uint32_t all = (1U << n) - 1;
  for (std::uint32_t cut = 0; cut < (1U << n); ++cut) {
    if (std::popcount(cut) >= k) continue;
    if (!connected_mask(g, all & ~cut)) return false;
  }
  return true;
}

int complement_matching(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> memo(std::size_t{1} << n, -1);
  std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    int& slot = memo[mask];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1U << v);
    int r = best(rest);
    for (int u = 0; u < n; ++u)
      if ((rest >> u & 1U) && !g.adjacent(u, v)) r = std::max(r, 1 + best(rest & ~(1U << u)));
    return slot = r;
  };
  return best((1U << n) - 1);
}

std::int64_t min_twice_capacity(const Graph& g) {
  const int n = g.vertex_count();
  std::int64_t best = -1;
  for (std::uint32_t c = 0; c < (1U << n); ++c) {
    if (!is_clique_mask(g, c)) continue;
    int x = 0;
    for (int v = 0; v < n; ++v) {
      if (c >> v & 1U) continue;
      const std::uint32_t nb = neighbour_mask(g, v) & c;
      if (nb != 0 && nb != c) ++x;
    }
    const std::int64_t twice = (n - std::popcount(c)) + x;
    if (best < 0 || twice < best) best = twice;
  }
  return best;
}

int max_disjoint_seagulls(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> memo(std::size_t{1} << n, -1);
  auto seagull = [&](int a, int b, int c) {
    const int e = g.adjacent(a, b) + g.adjacent(b, c) + g.adjacent(a, c);
    return e == 2;
  };
  std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
    if (std::popcount(mask) < 3) return 0;
    int& slot = memo[mask];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1U << v);
    int r = best(rest);  // v unused
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if ((rest >> a & 1U) && (rest >> b & 1U) && seagull(v, a, b))
          r = std::max(r, 1 + best(rest & ~(1U << a) & ~(1U << b)));
    return slot = r;
  };
  return best((1U << n) - 1);
}

std::int64_t bad_triples(const Graph& g, const VertexSet& z) {
  const int n = g.vertex_count();
  std::int64_t count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int t[3] = {a, b, c};
        int in_z = 0;
        int zv = -1;
        for (int v : t)
          if (z.contains(v)) {
            ++in_z;
            zv = v;
          }
        if (in_z != 1) continue;
        bool isolated = true;
        for (int v : t)
          if (v != zv && g.adjacent(v, zv)) isolated = false;
        if (isolated) ++count;
      }
  return count;
}

std::int64_t bad_quadruples(const Graph& g) {
  const int n = g.vertex_count();
  std::int64_t count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int q[4] = {a, b, c, d};
          int edges = 0;
          int deg[4] = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges == 2 && deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1) ++count;
        }
  return count;
}

Graph random_alpha2(int n, minorforge::Philox& rng) {
  std::vector<minorforge::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  minorforge::shuffle(std::span<minorforge::Edge>(pairs), rng);
  const auto limit = static_cast<std::size_t>(minorforge::uniform_below(rng, pairs.size() + 1));
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<minorforge::Edge> kept;
  for (const auto& e : pairs) {
    if (kept.size() >= limit) break;
    bool triangle = false;
    for (int w = 0; w < n && !triangle; ++w)
      triangle = adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(w)] &&
                 adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(w)];
    if (triangle) continue;
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
    adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    kept.push_back(e);
  }
  // Complement.
  std::vector<minorforge::Edge> comp;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) comp.push_back({u, v});
  return Graph(n, comp);
}

}  // namespace oracle
