#include "minorforge/clique.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "minorforge/error.hpp"

namespace minorforge {

std::vector<std::vector<Vertex>> true_twin_classes(const Graph& g) {
  const int n = g.vertex_count();
  std::map<std::vector<VertexSet::Word>, std::size_t> index;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v) {
    VertexSet closed = g.neighbours(v);
    closed.insert(v);
    std::vector<VertexSet::Word> key(closed.words().begin(), closed.words().end());
    auto [it, fresh] = index.try_emplace(std::move(key), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

namespace {

// Weighted graph on twin classes. Index order is lexicographic (by the
// smallest member of each class).
struct Quotient {
  std::vector<std::vector<Vertex>> classes;
  std::vector<VertexSet> adj;
  std::vector<int> weight;
  std::vector<int> class_of;

  int size() const { return static_cast<int>(classes.size()); }

  VertexSet expand(const std::vector<int>& picked, int universe) const {
    VertexSet s(universe);
    for (int c : picked)
      for (Vertex v : classes[static_cast<std::size_t>(c)]) s.insert(v);
    return s;
  }
};

Quotient build_quotient(const Graph& g) {
  Quotient q;
  q.classes = true_twin_classes(g);
  const int m = q.size();
  q.class_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int c = 0; c < m; ++c)
    for (Vertex v : q.classes[static_cast<std::size_t>(c)]) q.class_of[static_cast<std::size_t>(v)] = c;
  q.adj.assign(static_cast<std::size_t>(m), VertexSet(m));
  q.weight.resize(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    const auto& members = q.classes[static_cast<std::size_t>(c)];
    q.weight[static_cast<std::size_t>(c)] = static_cast<int>(members.size());
    for (Vertex u : g.neighbours(members.front())) {
      const int d = q.class_of[static_cast<std::size_t>(u)];
      if (d != c) q.adj[static_cast<std::size_t>(c)].insert(d);
    }
  }
  return q;
}

// Greedy extension of a clique (given as quotient classes) by repeatedly
// taking the candidate with most candidate neighbours.
std::vector<int> greedy_extend(const Quotient& q, std::vector<int> clique, VertexSet cand) {
  while (!cand.empty()) {
    int pick = -1;
    int best = -1;
    for (int c : cand) {
      const int score = q.adj[static_cast<std::size_t>(c)].intersection_size(cand) * 4 + q.weight[static_cast<std::size_t>(c)];
      if (score > best) {
        best = score;
        pick = c;
      }
    }
    clique.push_back(pick);
    cand &= q.adj[static_cast<std::size_t>(pick)];
  }
  return clique;
}

int total_weight(const Quotient& q, const std::vector<int>& cs) {
  int w = 0;
  for (int c : cs) w += q.weight[static_cast<std::size_t>(c)];
  return w;
}

std::vector<int> seed_clique(const Graph& g, const Quotient& q) {
  const int m = q.size();
  std::vector<int> best;
  int best_w = 0;
  auto consider = [&](std::vector<int> cs) {
    const int w = total_weight(q, cs);
    if (w > best_w) {
      best_w = w;
      best = std::move(cs);
    }
  };
  // Non-neighbourhoods that happen to be cliques (always, when the
  // complement is triangle-free).
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    VertexSet non = g.neighbours(v).complement();
    non.erase(v);
    if (non.empty() || !is_clique(g, non)) continue;
    std::vector<int> cs;
    VertexSet cand = VertexSet::full(m);
    VertexSet taken(m);
    for (Vertex u : non) {
      const int c = q.class_of[static_cast<std::size_t>(u)];
      if (!taken.contains(c)) {
        taken.insert(c);
        cs.push_back(c);
        cand &= q.adj[static_cast<std::size_t>(c)];
      }
    }
    consider(greedy_extend(q, std::move(cs), std::move(cand)));
  }
  for (int c = 0; c < m; ++c) consider(greedy_extend(q, {c}, q.adj[static_cast<std::size_t>(c)]));
  return best;
}

struct BudgetHit {};

class Search {
 public:
  Search(const Quotient& q, std::int64_t budget) : q_(q), budget_(budget) {}

  std::int64_t nodes() const { return nodes_; }

  // Weighted branch and bound; returns true when finished within budget.
  bool maximise(std::vector<int>& best, int& best_w) {
    const int m = q_.size();
    // Static order: non-increasing quotient degree, renumbered so that
    // bitset scans follow it.
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return q_.adj[static_cast<std::size_t>(a)].size() > q_.adj[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> rank(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    adj_.assign(static_cast<std::size_t>(m), VertexSet(m));
    w_.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
      const int c = order[static_cast<std::size_t>(i)];
      w_[static_cast<std::size_t>(i)] = q_.weight[static_cast<std::size_t>(c)];
      for (int d : q_.adj[static_cast<std::size_t>(c)]) adj_[static_cast<std::size_t>(i)].insert(rank[static_cast<std::size_t>(d)]);
    }
    best_w_ = best_w;
    try {
      expand(VertexSet::full(m), 0);
    } catch (const BudgetHit&) {
      finish(order, best, best_w);
      return false;
    }
    finish(order, best, best_w);
    return true;
  }

  // Lexicographically first clique of weight target in the lex-indexed
  // quotient; returns true when finished within budget.
  bool lex_first(int target, std::vector<int>& out, bool& found) {
    const int m = q_.size();
    adj_ = q_.adj;
    w_ = q_.weight;
    current_.clear();
    found = false;
    try {
      found = lex(VertexSet::full(m), 0, target);
    } catch (const BudgetHit&) {
      return false;
    }
    if (found) out = current_;
    return true;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetHit{};
  }

  void finish(const std::vector<int>& order, std::vector<int>& best, int& best_w) {
    if (best_w_ > best_w) {
      best.clear();
      for (int i : incumbent_) best.push_back(order[static_cast<std::size_t>(i)]);
      best_w = best_w_;
    }
  }

  // Greedy sequential colouring; colour class bound = heaviest member.
  void colour(const VertexSet& p, std::vector<int>& verts, std::vector<int>& bound) const {
    verts.clear();
    bound.clear();
    VertexSet uncoloured = p;
    int cum = 0;
    while (!uncoloured.empty()) {
      VertexSet q = uncoloured;
      const std::size_t start = verts.size();
      int heaviest = 0;
      for (Vertex v = q.first(); v >= 0; v = q.next(v + 1)) {
        q -= adj_[static_cast<std::size_t>(v)];
        uncoloured.erase(v);
        verts.push_back(v);
        heaviest = std::max(heaviest, w_[static_cast<std::size_t>(v)]);
      }
      cum += heaviest;
      bound.resize(verts.size(), cum);
      for (std::size_t i = start; i < verts.size(); ++i) bound[i] = cum;
    }
  }

  void expand(VertexSet p, int cw) {
    tick();
    std::vector<int> verts;
    std::vector<int> bound;
    colour(p, verts, bound);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (cw + bound[i] <= best_w_) return;
      const int v = verts[i];
      const int nw = cw + w_[static_cast<std::size_t>(v)];
      current_.push_back(v);
      VertexSet np = p & adj_[static_cast<std::size_t>(v)];
      if (np.empty()) {
        if (nw > best_w_) {
          best_w_ = nw;
          incumbent_ = current_;
        }
      } else {
        expand(std::move(np), nw);
      }
      current_.pop_back();
      p.erase(v);
    }
  }

  int colour_bound(const VertexSet& p) const {
    std::vector<int> verts;
    std::vector<int> bound;
    colour(p, verts, bound);
    return bound.empty() ? 0 : bound.back();
  }

  bool lex(VertexSet p, int cw, int target) {
    tick();
    if (cw >= target) return true;
    for (int c = p.first(); c >= 0; c = p.next(c + 1)) {
      if (cw + colour_bound(p) < target) return false;
      current_.push_back(c);
      if (lex(p & adj_[static_cast<std::size_t>(c)], cw + w_[static_cast<std::size_t>(c)], target)) return true;
      current_.pop_back();
      p.erase(c);
    }
    return false;
  }

  const Quotient& q_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> w_;
  std::vector<int> current_;
  std::vector<int> incumbent_;
  int best_w_ = 0;
};

}  // namespace

CliqueSearchResult find_max_clique(const Graph& g, const CliqueSearchOptions& opts) {
  CliqueSearchResult res;
  const int n = g.vertex_count();
  res.clique = VertexSet(n);
  if (n == 0) {
    res.proven_maximum = res.lex_least = true;
    return res;
  }
  const Quotient q = build_quotient(g);
  res.twin_classes = q.size();

  std::vector<int> best = seed_clique(g, q);
  int best_w = total_weight(q, best);

  Search search(q, opts.node_budget);
  res.proven_maximum = search.maximise(best, best_w);
  res.clique = q.expand(best, n);
  if (res.proven_maximum) {
    std::vector<int> lex;
    bool found = false;
    if (search.lex_first(best_w, lex, found) && found) {
      res.clique = q.expand(lex, n);
      res.lex_least = true;
    }
  }
  res.nodes = search.nodes();
  return res;
}

VertexSet max_clique(const Graph& g, const CliqueSearchOptions& opts) {
  CliqueSearchResult r = find_max_clique(g, opts);
  if (!r.proven_maximum || !r.lex_least)
    throw Error(ErrorCode::BudgetExhausted,
                "maximum clique not proven within " + std::to_string(opts.node_budget) + " nodes");
  return std::move(r.clique);
}

}  // namespace minorforge
