#include "minorforge/seagull.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <span>
#include <ostream>
#include <string>

#include "minorforge/connectivity.hpp"
#include "minorforge/error.hpp"
#include "minorforge/rng.hpp"

namespace minorforge {

std::optional<Seagull> orient_seagull(const Graph& g, Vertex x, Vertex y, Vertex z) {
  if (x == y || y == z || x == z) return std::nullopt;
  const std::array<Vertex, 3> t{x, y, z};
  for (int m = 0; m < 3; ++m) {
    const Vertex mid = t[static_cast<std::size_t>(m)];
    const Vertex p = t[static_cast<std::size_t>((m + 1) % 3)];
    const Vertex q = t[static_cast<std::size_t>((m + 2) % 3)];
    if (g.adjacent(mid, p) && g.adjacent(mid, q) && !g.adjacent(p, q))
      return Seagull{std::min(p, q), mid, std::max(p, q)};
  }
  return std::nullopt;
}

bool is_seagull(const Graph& g, Vertex x, Vertex y, Vertex z) { return orient_seagull(g, x, y, z).has_value(); }

bool is_seagull_partition_of(const Graph& g, const SeagullPartition& p, const VertexSet& cover) {
  VertexSet used(g.vertex_count());
  for (const Seagull& s : p.triples) {
    for (Vertex v : {s.a, s.mid, s.b}) {
      if (v < 0 || v >= g.vertex_count() || used.contains(v)) return false;
      used.insert(v);
    }
    if (!g.adjacent(s.a, s.mid) || !g.adjacent(s.mid, s.b) || g.adjacent(s.a, s.b)) return false;
  }
  return used == cover;
}

namespace {

struct BudgetHit {};

class Packer {
 public:
  Packer(const Graph& g, std::int64_t budget) : g_(g), budget_(budget) {}

  bool solve(VertexSet& rest, int remaining) {
    if (remaining == 0) return true;
    if (++nodes_ > budget_) throw BudgetHit{};
    if (!feasible(rest, remaining)) return false;

    const Vertex v = rest.first();
    const VertexSet nb = g_.neighbours(v) & rest;
    VertexSet far = rest - g_.neighbours(v);
    far.erase(v);

    auto attempt = [&](Seagull s) {
      rest.erase(s.a);
      rest.erase(s.mid);
      rest.erase(s.b);
      chosen_.push_back(s);
      if (solve(rest, remaining - 1)) return true;
      chosen_.pop_back();
      rest.insert(s.a);
      rest.insert(s.mid);
      rest.insert(s.b);
      return false;
    };

    // v as an endpoint: v - m - w with w not adjacent to v.
    for (Vertex m : nb) {
      const VertexSet ends = g_.neighbours(m) & far;
      for (Vertex w : ends)
        if (attempt({std::min(v, w), m, std::max(v, w)})) return true;
    }
    // v as the middle.
    for (Vertex a : nb) {
      VertexSet others = nb - g_.neighbours(a);
      for (Vertex b = others.next(a + 1); b >= 0; b = others.next(b + 1))
        if (attempt({a, v, b})) return true;
    }
    return false;
  }

  std::vector<Seagull> take() { return std::move(chosen_); }

 private:
  // Necessary conditions on the residual vertex set. Each seagull has one
  // middle and two non-adjacent ends, and every residual vertex has to sit
  // in some residual seagull.
  bool feasible(const VertexSet& rest, int remaining) const {
    int universal = 0;
    for (Vertex u : rest) {
      const VertexSet nb = g_.neighbours(u) & rest;
      VertexSet far = rest - g_.neighbours(u);
      far.erase(u);
      if (far.empty()) {
        if (++universal > remaining) return false;
      }
      if (!covered(nb, far)) return false;
    }
    return true;
  }

  bool covered(const VertexSet& nb, const VertexSet& far) const {
    for (Vertex m : nb) {
      if (g_.neighbours(m).intersects(far)) return true;  // as an end
      if ((nb - g_.neighbours(m)).size() > 1) return true;  // as the middle
    }
    return false;
  }

  const Graph& g_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<Seagull> chosen_;
};

// Ends first, middles second: take `r` pairs from a maximum matching of
// the complement (ends must be non-adjacent), then match the leftover
// vertices to pairs they are adjacent to on both sides.
std::optional<std::vector<Seagull>> assemble(const Graph& g, const std::vector<Edge>& pairs, int r) {
  VertexSet middles = g.all_vertices();
  for (int i = 0; i < r; ++i) {
    middles.erase(pairs[static_cast<std::size_t>(i)].u);
    middles.erase(pairs[static_cast<std::size_t>(i)].v);
  }
  const std::vector<Vertex> mids = middles.members();
  // Bipartite graph: mids are 0..r-1, pairs are r..2r-1.
  std::vector<VertexSet> adj(static_cast<std::size_t>(2 * r), VertexSet(2 * r));
  for (int i = 0; i < r; ++i) {
    const Edge& e = pairs[static_cast<std::size_t>(i)];
    const VertexSet common = g.neighbours(e.u) & g.neighbours(e.v);
    for (int j = 0; j < r; ++j)
      if (common.contains(mids[static_cast<std::size_t>(j)])) {
        adj[static_cast<std::size_t>(j)].insert(r + i);
        adj[static_cast<std::size_t>(r + i)].insert(j);
      }
  }
  const std::vector<Vertex> mate = maximum_matching(Graph(std::move(adj)));
  std::vector<Seagull> out;
  for (int j = 0; j < r; ++j) {
    const Vertex p = mate[static_cast<std::size_t>(j)];
    if (p < 0) return std::nullopt;
    const Edge& e = pairs[static_cast<std::size_t>(p - r)];
    out.push_back({e.u, mids[static_cast<std::size_t>(j)], e.v});
  }
  return out;
}

enum class Construction { Found, Impossible, Unknown };

Construction construct(const Graph& g, int attempts, std::vector<Seagull>& out) {
  const int r = g.vertex_count() / 3;
  const Graph gc = complement(g);
  const std::vector<Vertex> mate = maximum_matching(gc);
  std::vector<Edge> pairs;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (mate[static_cast<std::size_t>(v)] > v) pairs.push_back({v, mate[static_cast<std::size_t>(v)]});
  // Disjoint seagulls have disjoint non-adjacent end pairs.
  if (static_cast<int>(pairs.size()) < r) return Construction::Impossible;
  // Vertices with many non-neighbours make poor middles.
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Edge& x, const Edge& y) {
    return gc.degree(x.u) + gc.degree(x.v) > gc.degree(y.u) + gc.degree(y.v);
  });
  Philox rng(0x5ea9U, static_cast<std::uint64_t>(g.vertex_count()));
  for (int t = 0; t < attempts; ++t) {
    if (auto found = assemble(g, pairs, r)) {
      out = std::move(*found);
      return Construction::Found;
    }
    shuffle(std::span<Edge>(pairs), rng);
  }
  return Construction::Unknown;
}

}  // namespace

std::optional<SeagullPartition> seagull_partition(const Graph& g, const PackingOptions& opts) {
  const int n = g.vertex_count();
  if (n % 3 != 0) throw Error(ErrorCode::WrongOrder, std::to_string(n) + " vertices is not a multiple of 3");
  std::vector<Seagull> built;
  switch (construct(g, opts.construction_attempts, built)) {
    case Construction::Found: {
      SeagullPartition p{std::move(built)};
      std::sort(p.triples.begin(), p.triples.end());
      return p;
    }
    case Construction::Impossible:
      return std::nullopt;
    case Construction::Unknown:
      break;
  }
  Packer packer(g, opts.node_budget);
  VertexSet rest = g.all_vertices();
  try {
    if (!packer.solve(rest, n / 3)) return std::nullopt;
  } catch (const BudgetHit&) {
    throw Error(ErrorCode::BudgetExhausted,
                "seagull search exceeded " + std::to_string(opts.node_budget) + " nodes");
  }
  SeagullPartition p{packer.take()};
  std::sort(p.triples.begin(), p.triples.end());
  return p;
}

int max_disjoint_seagulls_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 15) throw Error(ErrorCode::TooLarge, "brute force limited to 15 vertices");
  // Every seagull as a bitmask, bucketed by its lowest vertex.
  std::vector<std::vector<unsigned>> by_low(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z)
        if (is_seagull(g, x, y, z)) by_low[static_cast<std::size_t>(x)].push_back((1U << x) | (1U << y) | (1U << z));

  std::vector<signed char> memo(std::size_t{1} << n, -1);
  memo[0] = 0;
  // Masks in increasing order: every submask is smaller, so it is ready.
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    const int low = std::countr_zero(mask);
    int best = memo[mask & (mask - 1)];
    for (unsigned t : by_low[static_cast<std::size_t>(low)])
      if ((t & mask) == t) best = std::max(best, 1 + memo[mask & ~t]);
    memo[mask] = static_cast<signed char>(best);
  }
  return memo[(1U << n) - 1];
}

void write_seagulls(std::ostream& out, const SeagullPartition& p) {
  for (const Seagull& s : p.triples) out << "s " << s.a + 1 << ' ' << s.mid + 1 << ' ' << s.b + 1 << '\n';
}

}  // namespace minorforge
