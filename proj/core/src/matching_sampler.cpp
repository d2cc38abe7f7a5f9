#include "minorforge/matching_sampler.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "minorforge/error.hpp"

namespace minorforge {

Pairing Pairing::canonical() const {
  Pairing c = *this;
  std::sort(c.pairs.begin(), c.pairs.end());
  return c;
}

bool Pairing::contains(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  return std::find(pairs.begin(), pairs.end(), e) != pairs.end();
}

Pairing sample_uniform_pairing(std::span<const Vertex> ground, Philox& rng) {
  if (ground.size() % 2 != 0)
    throw Error(ErrorCode::OddGroundSet, "cannot pair " + std::to_string(ground.size()) + " elements");
  std::vector<Vertex> perm(ground.begin(), ground.end());
  shuffle(std::span<Vertex>(perm), rng);
  Pairing m;
  m.pairs.reserve(perm.size() / 2);
  for (std::size_t i = 0; i < perm.size(); i += 2)
    m.pairs.push_back({std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1])});
  return m;
}

Pairing sample_uniform_pairing(int x_size, Philox& rng) {
  if (x_size < 0) throw Error(ErrorCode::InvalidArgument, "negative ground set size");
  std::vector<Vertex> ground(static_cast<std::size_t>(x_size));
  std::iota(ground.begin(), ground.end(), 0);
  return sample_uniform_pairing(ground, rng);
}

std::int64_t pairing_edge_count(const Pairing& m, const Graph& g) {
  return std::count_if(m.pairs.begin(), m.pairs.end(), [&](const Edge& e) { return g.adjacent(e.u, e.v); });
}

bool in_event_A(const Pairing& m, const Graph& g, const Rational& lambda) {
  const std::int64_t x = g.vertex_count();
  if (x < 2) throw Error(ErrorCode::InvalidArgument, "event A needs at least two vertices");
  // count >= E/(x-1) - p/q  <=>  count (x-1) q >= E q - p (x-1)
  const Int128 lhs = static_cast<Int128>(pairing_edge_count(m, g)) * (x - 1) * lambda.den();
  const Int128 rhs = static_cast<Int128>(g.edge_count()) * lambda.den() - static_cast<Int128>(lambda.num()) * (x - 1);
  return lhs >= rhs;
}

ConditionedSample sample_conditioned(const Graph& g, const Rational& lambda, std::int64_t max_tries, Philox& rng,
                                     std::int64_t min_edges) {
  if (lambda <= Rational(0)) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  ConditionedSample out;
  while (out.tries < max_tries) {
    ++out.tries;
    Pairing m = sample_uniform_pairing(g.vertex_count(), rng);
    if (in_event_A(m, g, lambda) && pairing_edge_count(m, g) >= min_edges) {
      out.pairing = std::move(m);
      return out;
    }
  }
  throw Error(ErrorCode::RejectionExhausted, "no pairing in the event after " + std::to_string(max_tries) + " tries");
}

std::vector<Edge> subsample_matching(const Pairing& m, const Graph& g, std::int64_t count, Philox& rng) {
  std::vector<Edge> hits;
  for (const Edge& e : m.pairs)
    if (g.adjacent(e.u, e.v)) hits.push_back(e);
  if (count < 0 || static_cast<std::int64_t>(hits.size()) < count)
    throw Error(ErrorCode::NotEnoughEdges,
                "need " + std::to_string(count) + " matching edges, pairing has " + std::to_string(hits.size()));
  // Partial Fisher-Yates: the first `count` slots are a uniform subset.
  for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_below(rng, hits.size() - i));
    std::swap(hits[i], hits[j]);
  }
  hits.resize(static_cast<std::size_t>(count));
  std::sort(hits.begin(), hits.end());
  return hits;
}

double chebyshev_rhs(std::int64_t x_size, double lambda) {
  if (lambda <= 0) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  return static_cast<double>(x_size) / (lambda * lambda);
}

}  // namespace minorforge
