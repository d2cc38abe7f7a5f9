#include "minorforge/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "minorforge/error.hpp"

namespace minorforge {

namespace {

// Split network: v_in = 2v, v_out = 2v + 1. Built once per graph, flows
// reset between queries.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : n_(g.vertex_count()) {
    head_.assign(static_cast<std::size_t>(2 * n_), -1);
    for (Vertex v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v);
      add_arc(2 * e.v + 1, 2 * e.u);
    }
  }

  int max_flow(Vertex s, Vertex t, int cap) {
    std::fill(flow_.begin(), flow_.end(), 0);
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int total = 0;
    std::vector<int> via(static_cast<std::size_t>(2 * n_));
    while (total < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> bfs;
      bfs.push(source);
      via[static_cast<std::size_t>(source)] = -2;
      while (!bfs.empty() && via[static_cast<std::size_t>(sink)] == -1) {
        const int x = bfs.front();
        bfs.pop();
        for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = next_[static_cast<std::size_t>(a)]) {
          const int y = to_[static_cast<std::size_t>(a)];
          if (via[static_cast<std::size_t>(y)] != -1 || residual(a) <= 0) continue;
          via[static_cast<std::size_t>(y)] = a;
          bfs.push(y);
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -1) break;
      for (int y = sink; y != source;) {
        const int a = via[static_cast<std::size_t>(y)];
        flow_[static_cast<std::size_t>(a)] += 1;
        flow_[static_cast<std::size_t>(a ^ 1)] -= 1;
        y = to_[static_cast<std::size_t>(a ^ 1)];
      }
      ++total;
    }
    return total;
  }

 private:
  void add_arc(int from, int to) {
    push(from, to, 1);
    push(to, from, 0);
  }
  void push(int from, int to, int c) {
    to_.push_back(to);
    cap_.push_back(c);
    flow_.push_back(0);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
  }
  int residual(int a) const { return cap_[static_cast<std::size_t>(a)] - flow_[static_cast<std::size_t>(a)]; }

  int n_;
  std::vector<int> head_, next_, to_, cap_, flow_;
};

int local_connectivity(const Graph& g, SplitNetwork& net, Vertex s, Vertex t, int cap) {
  // Common neighbours are disjoint paths of length two; enough of them
  // settles the query without a flow computation.
  if (g.neighbours(s).intersection_size(g.neighbours(t)) >= cap) return cap;
  return net.max_flow(s, t, cap);
}

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  if (s == t || g.adjacent(s, t))
    throw Error(ErrorCode::InvalidArgument, "local connectivity needs distinct non-adjacent vertices");
  if (cap <= 0) return 0;
  SplitNetwork net(g);
  return local_connectivity(g, net, s, t, cap);
}

std::optional<std::pair<Vertex, Vertex>> find_separated_pair(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k <= 0 || n < 2) return std::nullopt;
  // A cut S with |S| < k misses one of the first k vertices; the first one
  // it misses has every smaller-indexed vertex in S, so some vertex on the
  // far side of S has a larger index.
  SplitNetwork net(g);
  for (Vertex i = 0; i < std::min(k, n); ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j) && local_connectivity(g, net, i, j, k) < k) return std::make_pair(i, j);
  return std::nullopt;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count() <= k) return false;
  return !find_separated_pair(g, k).has_value();
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  int best = n - 1;
  SplitNetwork net(g);
  for (Vertex i = 0; i < n && i <= best; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) best = std::min(best, local_connectivity(g, net, i, j, best));
  return best;
}

std::vector<Vertex> maximum_matching(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> mate(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n)),
      base(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n)), blossom(static_cast<std::size_t>(n));
  auto at = [](auto& vec, int i) -> auto& { return vec[static_cast<std::size_t>(i)]; };

  auto lca = [&](int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    while (true) {
      a = at(base, a);
      at(seen, a) = 1;
      if (at(mate, a) == -1) break;
      a = at(parent, at(mate, a));
    }
    while (true) {
      b = at(base, b);
      if (at(seen, b)) return b;
      b = at(parent, at(mate, b));
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (at(base, v) != b) {
      at(blossom, at(base, v)) = at(blossom, at(base, at(mate, v))) = 1;
      at(parent, v) = child;
      child = at(mate, v);
      v = at(parent, at(mate, v));
    }
  };
  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) at(base, i) = i;
    at(used, root) = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (Vertex to : g.neighbours(v)) {
        if (at(base, v) == at(base, to) || at(mate, v) == to) continue;
        if (to == root || (at(mate, to) != -1 && at(parent, at(mate, to)) != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (at(blossom, at(base, i))) {
              at(base, i) = cur;
              if (!at(used, i)) {
                at(used, i) = 1;
                q.push(i);
              }
            }
          }
        } else if (at(parent, to) == -1) {
          at(parent, to) = v;
          if (at(mate, to) == -1) return to;
          at(used, at(mate, to)) = 1;
          q.push(at(mate, to));
        }
      }
    }
    return -1;
  };

  // Greedy start, then augment from every exposed vertex.
  for (Vertex v = 0; v < n; ++v) {
    if (at(mate, v) != -1) continue;
    for (Vertex u : g.neighbours(v))
      if (at(mate, u) == -1) {
        at(mate, u) = v;
        at(mate, v) = u;
        break;
      }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (at(mate, v) != -1) continue;
    int x = find_path(v);
    while (x != -1) {
      const int pv = at(parent, x);
      const int ppv = at(mate, pv);
      at(mate, x) = pv;
      at(mate, pv) = x;
      x = ppv;
    }
  }
  return mate;
}

int maximum_matching_size(const Graph& g) {
  const auto mate = maximum_matching(g);
  return static_cast<int>(std::count_if(mate.begin(), mate.end(), [](int m) { return m >= 0; })) / 2;
}

}  // namespace minorforge
