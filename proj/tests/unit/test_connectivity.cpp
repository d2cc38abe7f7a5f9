#include <doctest.h>

#include "minorforge/connectivity.hpp"
#include "minorforge/generators.hpp"
#include "oracles.hpp"

using namespace minorforge;

TEST_CASE("cycles are 2-connected, paths are not") {
  CHECK(is_k_connected(oracle::cycle(5), 2));
  CHECK_FALSE(is_k_connected(oracle::cycle(5), 3));
  CHECK_FALSE(is_k_connected(oracle::path(3), 2));
  CHECK(is_k_connected(oracle::path(3), 1));
}

TEST_CASE("complete graphs") {
  CHECK(is_k_connected(oracle::complete(6), 5));
  CHECK_FALSE(is_k_connected(oracle::complete(6), 6));
  CHECK(vertex_connectivity(oracle::complete(6)) == 5);
}

TEST_CASE("every graph is 0-connected") {
  CHECK(is_k_connected(Graph(0), 0));
  CHECK(is_k_connected(Graph(3), 0));
  CHECK_FALSE(is_k_connected(Graph(3), 1));
}

TEST_CASE("local connectivity counts disjoint paths") {
  const Graph pet = named("petersen");
  CHECK(local_vertex_connectivity(pet, 0, 2, 10) == 3);
  CHECK(local_vertex_connectivity(pet, 0, 2, 2) == 2);
  CHECK(vertex_connectivity(pet) == 3);
}

TEST_CASE("separated pair witnesses a small cut") {
  // Two triangles sharing vertex 2.
  const Graph g = oracle::make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const auto pair = find_separated_pair(g, 2);
  REQUIRE(pair.has_value());
  CHECK_FALSE(g.adjacent(pair->first, pair->second));
  CHECK(local_vertex_connectivity(g, pair->first, pair->second, 2) < 2);
}

TEST_CASE("connectivity matches cut enumeration") {
  Philox rng(21, 0);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 9));
    const Graph g = oracle::random_alpha2(n, rng);
    const int kappa = vertex_connectivity(g);
    for (int k = 0; k <= n; ++k) CHECK(is_k_connected(g, k) == oracle::k_connected(g, k));
    CHECK(oracle::k_connected(g, kappa));
    CHECK_FALSE(oracle::k_connected(g, kappa + 1));
  }
}

TEST_CASE("maximum matching against brute force") {
  Philox rng(8, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 12));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (uniform01(rng) < 0.3) edges.push_back({u, v});
    const Graph g(n, edges);
    const std::vector<Vertex> mate = maximum_matching(g);
    int matched = 0;
    for (Vertex v = 0; v < n; ++v) {
      const Vertex m = mate[static_cast<std::size_t>(v)];
      if (m < 0) continue;
      ++matched;
      CHECK(g.adjacent(v, m));
      CHECK(mate[static_cast<std::size_t>(m)] == v);
    }
    CHECK(matched / 2 == maximum_matching_size(g));
    // The oracle counts complement matchings, so hand it the complement.
    CHECK(maximum_matching_size(g) == oracle::complement_matching(complement(g)));
  }
}

TEST_CASE("blossoms: odd cycles with pendant paths") {
  // C5 with pendants at 0 and 2.
  const Graph g = oracle::make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {2, 6}});
  CHECK(maximum_matching_size(g) == 3);
  const Graph h = oracle::make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {2, 6}, {6, 7}});
  CHECK(maximum_matching_size(h) == 4);
}
