#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>

#include "minorforge/error.hpp"
#include "minorforge/matching_sampler.hpp"
#include "oracles.hpp"

using namespace minorforge;

namespace {

// All pairings of 0..x-1 in canonical form.
std::vector<std::vector<Edge>> all_pairings(int x) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> cur;
  std::function<void(std::vector<int>)> rec = [&](std::vector<int> rest) {
    if (rest.empty()) {
      auto sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(sorted);
      return;
    }
    const int a = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
      std::vector<int> next;
      for (std::size_t j = 1; j < rest.size(); ++j)
        if (j != i) next.push_back(rest[j]);
      cur.push_back({a, rest[i]});
      rec(next);
      cur.pop_back();
    }
  };
  std::vector<int> ground(static_cast<std::size_t>(x));
  for (int i = 0; i < x; ++i) ground[static_cast<std::size_t>(i)] = i;
  rec(ground);
  return out;
}

}  // namespace

TEST_CASE("pairings partition the ground set") {
  Philox rng(1, 0);
  const std::vector<Vertex> ground{3, 8, 9, 14, 20, 21};
  const Pairing m = sample_uniform_pairing(ground, rng);
  CHECK(m.pairs.size() == 3);
  std::vector<Vertex> seen;
  for (const Edge& e : m.pairs) {
    CHECK(e.u < e.v);
    seen.push_back(e.u);
    seen.push_back(e.v);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == ground);
  CHECK_THROWS_AS(sample_uniform_pairing(5, rng), Error);
  CHECK(sample_uniform_pairing(2, rng).pairs == std::vector<Edge>{{0, 1}});
}

TEST_CASE("|X| = 4: three pairings, each a third of the time") {
  Philox rng(2, 0);
  std::map<std::vector<Edge>, int> freq;
  const int trials = 30000;
  for (int i = 0; i < trials; ++i) ++freq[sample_uniform_pairing(4, rng).canonical().pairs];
  CHECK(freq.size() == 3);
  const double se = std::sqrt((1.0 / 3) * (2.0 / 3) / trials);
  for (const auto& [p, c] : freq) CHECK(std::abs(static_cast<double>(c) / trials - 1.0 / 3) < 4 * se);
}

TEST_CASE("|X| = 6: disjoint pairs together with probability 1/15") {
  Philox rng(3, 0);
  const int trials = 60000;
  int both = 0;
  for (int i = 0; i < trials; ++i) {
    const Pairing m = sample_uniform_pairing(6, rng);
    both += m.contains({0, 1}) && m.contains({2, 3});
  }
  const double p = 1.0 / 15;
  CHECK(std::abs(static_cast<double>(both) / trials - p) < 4 * std::sqrt(p * (1 - p) / trials));
}

TEST_CASE("edge counts") {
  Philox rng(4, 0);
  const Pairing m = sample_uniform_pairing(8, rng);
  CHECK(pairing_edge_count(m, oracle::complete(8)) == 4);
  CHECK(pairing_edge_count(m, Graph(8)) == 0);
  const Pairing diagonals{{{0, 2}, {1, 3}}};
  CHECK(pairing_edge_count(diagonals, oracle::cycle(4)) == 0);
}

TEST_CASE("event A is decided exactly") {
  Philox rng(5, 0);
  CHECK(in_event_A(sample_uniform_pairing(6, rng), oracle::complete(6), Rational(0)));
  CHECK(in_event_A(sample_uniform_pairing(6, rng), Graph(6), Rational(0)));
  const Pairing diagonals{{{0, 2}, {1, 3}}};
  // 0 >= 4/3 - 1 is false.
  CHECK_FALSE(in_event_A(diagonals, oracle::cycle(4), Rational(1)));
  // 0 >= 4/3 - 4/3 holds with equality.
  CHECK(in_event_A(diagonals, oracle::cycle(4), Rational(4, 3)));
  CHECK_FALSE(in_event_A(diagonals, oracle::cycle(4), Rational(1'333'333, 1'000'000)));
}

TEST_CASE("conditioned sampling is uniform on the event") {
  // C6: A needs at least 6/5 - 1/2 edges, i.e. one edge of the cycle.
  const Graph g = oracle::cycle(6);
  const Rational lambda(1, 2);
  std::map<std::vector<Edge>, int> freq;
  std::vector<std::vector<Edge>> inside;
  for (const auto& p : all_pairings(6)) {
    REQUIRE(p.size() == 3);
    if (in_event_A(Pairing{p}, g, lambda)) inside.push_back(p);
  }
  REQUIRE(all_pairings(6).size() == 15);
  REQUIRE(inside.size() > 1);
  REQUIRE(inside.size() < 15);
  Philox rng(6, 0);
  const int trials = 40000;
  for (int i = 0; i < trials; ++i) ++freq[sample_conditioned(g, lambda, 1000, rng).pairing.canonical().pairs];
  CHECK(freq.size() == inside.size());
  const double p = 1.0 / static_cast<double>(inside.size());
  const double se = std::sqrt(p * (1 - p) / trials);
  for (const auto& pairing : inside) CHECK(std::abs(freq[pairing] / static_cast<double>(trials) - p) < 4 * se);
}

TEST_CASE("complete graph accepts the first sample") {
  Philox rng(7, 0);
  CHECK(sample_conditioned(oracle::complete(10), Rational(1), 1, rng).tries == 1);
}

TEST_CASE("tiny lambda on a sparse graph exhausts a single try") {
  // One edge on four vertices: A needs the edge itself (count >= 1/3 - lambda).
  const Graph g = oracle::make_graph(4, {{0, 1}});
  const Rational lambda(1, 1'000'000);
  int thrown = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Philox rng(s, 0);
    try {
      sample_conditioned(g, lambda, 1, rng);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RejectionExhausted);
      ++thrown;
    }
  }
  CHECK(thrown > 0);
}

TEST_CASE("minimum edge count is enforced inside the rejection loop") {
  Philox rng(8, 0);
  const Graph g = oracle::cycle(8);
  for (int i = 0; i < 50; ++i) CHECK(pairing_edge_count(sample_conditioned(g, Rational(10), 100000, rng, 3).pairing, g) >= 3);
}

TEST_CASE("subsampling") {
  Philox rng(9, 0);
  const Graph k8 = oracle::complete(8);
  const Pairing m = sample_uniform_pairing(8, rng);
  auto all = subsample_matching(m, k8, 4, rng);
  auto expect = m.pairs;
  std::sort(expect.begin(), expect.end());
  CHECK(all == expect);
  CHECK(subsample_matching(m, k8, 0, rng).empty());
  CHECK_THROWS_AS(subsample_matching(m, k8, 5, rng), Error);
}

TEST_CASE("subsampling picks each matching edge with probability count / edges") {
  Philox rng(10, 0);
  const Pairing m{{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}};
  const Graph k10 = oracle::complete(10);
  std::array<int, 5> hits{};
  const int trials = 20000;
  for (int i = 0; i < trials; ++i)
    for (const Edge& e : subsample_matching(m, k10, 2, rng)) ++hits[static_cast<std::size_t>(e.u / 2)];
  const double p = 0.4;
  for (int h : hits) CHECK(std::abs(h / static_cast<double>(trials) - p) < 4 * std::sqrt(p * (1 - p) / trials));
}

TEST_CASE("Chebyshev right-hand side") {
  CHECK(chebyshev_rhs(10, 5) == doctest::Approx(0.4));
  CHECK(chebyshev_rhs(4, 2) == doctest::Approx(1.0));
  CHECK(chebyshev_rhs(400, std::cbrt(400.0 * 400.0)) == doctest::Approx(std::pow(400.0, -1.0 / 3)).epsilon(1e-12));
  CHECK(chebyshev_rhs(400, std::cbrt(400.0 * 400.0)) == doctest::Approx(0.1357).epsilon(1e-3));
  CHECK_THROWS_AS(chebyshev_rhs(4, 0), Error);
}
