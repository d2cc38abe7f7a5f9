#include "minorforge/alpha2.hpp"

#include <algorithm>

#include "minorforge/connectivity.hpp"
#include "minorforge/error.hpp"

namespace minorforge {

std::string HalfInteger::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

VertexSet non_neighbours(const Graph& g, Vertex v) {
  VertexSet s = g.neighbours(v).complement();
  s.erase(v);
  return s;
}

bool is_alpha_le_2(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> non;
  non.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) non.push_back(non_neighbours(g, v));
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet& nu = non[static_cast<std::size_t>(u)];
    for (Vertex v = nu.next(u + 1); v >= 0; v = nu.next(v + 1))
      if (nu.intersects(non[static_cast<std::size_t>(v)])) return false;
  }
  return true;
}

CliqueStats clique_stats(const Graph& g, const VertexSet& z) {
  if (!is_clique(g, z)) throw Error(ErrorCode::NotAClique, "Z is not a clique");
  CliqueStats st;
  st.z_clique = z;
  st.k = z.size();
  for (Vertex v : z) st.a += g.non_degree(v);
  const VertexSet outside = z.complement();
  std::int64_t twice = 0;
  for (Vertex v : outside) twice += non_neighbours(g, v).intersection_size(outside);
  st.b = twice / 2;
  return st;
}

namespace {

// Vertices outside c with both a neighbour and a non-neighbour in c.
VertexSet mixed_vertices(const Graph& g, const VertexSet& c) {
  const int n = g.vertex_count();
  VertexSet complete = VertexSet::full(n);
  VertexSet anti = VertexSet::full(n);
  for (Vertex v : c) {
    complete &= g.neighbours(v);
    anti -= g.neighbours(v);
  }
  VertexSet x = VertexSet::full(n);
  x -= c;
  x -= complete;
  x -= anti;
  return x;
}

struct BudgetHit {};

// Depth-first enumeration of cliques minimising n - |C| + |X_C| (twice the
// capacity). X only grows as C grows, which gives the bound.
class CapacitySearch {
 public:
  CapacitySearch(const Graph& g, std::int64_t budget) : g_(g), n_(g.vertex_count()), budget_(budget) {}

  // Finds the minimum below `ceiling` (exclusive); stop_at_first makes it a
  // decision search. Returns false if the budget ran out.
  bool run(std::int64_t ceiling, bool stop_at_first) {
    best_ = ceiling;
    stop_ = stop_at_first;
    found_ = false;
    VertexSet all = VertexSet::full(n_);
    VertexSet c(n_);
    try {
      visit(c, all, all, all);
    } catch (const BudgetHit&) {
      return false;
    }
    return true;
  }

  bool found() const { return found_; }
  std::int64_t best() const { return best_; }
  const VertexSet& witness() const { return witness_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  int clique_upper_bound(const VertexSet& p) const {
    VertexSet left = p;
    int colours = 0;
    while (!left.empty()) {
      ++colours;
      VertexSet q = left;
      for (Vertex v = q.first(); v >= 0; v = q.next(v + 1)) {
        q -= g_.neighbours(v);
        left.erase(v);
      }
    }
    return colours;
  }

  // Returns true to abort (decision search satisfied).
  bool visit(VertexSet& c, const VertexSet& cand, const VertexSet& complete, const VertexSet& anti) {
    if (++nodes_ > budget_) throw BudgetHit{};
    VertexSet x = VertexSet::full(n_);
    x -= c;
    x -= complete;
    x -= anti;
    const int csize = c.size();
    const std::int64_t twice = n_ - csize + x.size();
    if (twice < best_) {
      best_ = twice;
      witness_ = c;
      found_ = true;
      if (stop_) return true;
    }
    if (cand.empty()) return false;
    if (n_ - csize - clique_upper_bound(cand) + x.size() >= best_) return false;
    for (Vertex u : cand) {
      VertexSet next_cand = cand & g_.neighbours(u);
      for (Vertex w = next_cand.first(); w >= 0 && w < u; w = next_cand.next(w + 1)) next_cand.erase(w);
      VertexSet nc = complete & g_.neighbours(u);
      VertexSet na = anti - g_.neighbours(u);
      na.erase(u);
      c.insert(u);
      const bool stop = visit(c, next_cand, nc, na);
      c.erase(u);
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::int64_t best_ = 0;
  bool stop_ = false;
  bool found_ = false;
  VertexSet witness_;
};

}  // namespace

HalfInteger capacity(const Graph& g, const VertexSet& c) {
  if (!is_clique(g, c)) throw Error(ErrorCode::NotAClique, "capacity needs a clique");
  return {static_cast<std::int64_t>(g.vertex_count() - c.size()) + mixed_vertices(g, c).size()};
}

CapacityMinimum min_capacity(const Graph& g, SearchBudget budget) {
  CapacitySearch search(g, budget.nodes);
  CapacityMinimum out;
  // The empty clique has capacity n/2; start just above it.
  const bool done = search.run(static_cast<std::int64_t>(g.vertex_count()) + 1, false);
  out.value = {search.best()};
  out.witness = search.witness();
  out.exact = done;
  out.nodes = search.nodes();
  return out;
}

int complement_matching_size(const Graph& g) { return maximum_matching_size(complement(g)); }

bool is_five_wheel(const Graph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 10) return false;
  Vertex hub = -1;
  for (Vertex v = 0; v < 6; ++v) {
    const int d = g.degree(v);
    if (d == 5) {
      if (hub >= 0) return false;
      hub = v;
    } else if (d != 3) {
      return false;
    }
  }
  if (hub < 0) return false;
  VertexSet rim = VertexSet::full(6);
  rim.erase(hub);
  const Graph cycle = induced_subgraph(g, rim).graph;
  for (Vertex v = 0; v < 5; ++v)
    if (cycle.degree(v) != 2) return false;
  return induces_connected(cycle, cycle.all_vertices());
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

SeagullConditionReport seagull_conditions(const Graph& g, int k, SearchBudget budget) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  if (!is_alpha_le_2(g)) throw Error(ErrorCode::AlphaTooLarge, "graph has an independent set of size 3");
  const auto verdict = [](bool ok) { return ok ? Verdict::Holds : Verdict::Fails; };

  SeagullConditionReport r;
  r.k = k;
  r.vertex_count = g.vertex_count();
  r.size = verdict(g.vertex_count() >= 3 * k);

  if (k <= 0) {
    r.connectivity = Verdict::Holds;
  } else if (g.vertex_count() <= k) {
    r.connectivity = Verdict::Fails;
  } else {
    r.separated_pair = find_separated_pair(g, k);
    r.connectivity = verdict(!r.separated_pair.has_value());
  }

  CapacitySearch search(g, budget.nodes);
  if (!search.run(2 * static_cast<std::int64_t>(k), true)) {
    r.capacity = Verdict::Undetermined;
  } else if (search.found()) {
    r.capacity = Verdict::Fails;
    r.low_capacity_clique = search.witness();
  } else {
    r.capacity = Verdict::Holds;
  }

  r.complement_matching = complement_matching_size(g);
  r.matching = verdict(r.complement_matching >= k);
  r.five_wheel = verdict(k != 2 || !is_five_wheel(g));
  return r;
}

}  // namespace minorforge
