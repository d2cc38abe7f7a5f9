#include <doctest.h>

#include <sstream>

#include "minorforge/alpha2.hpp"
#include "minorforge/clique.hpp"
#include "minorforge/error.hpp"
#include "minorforge/generators.hpp"
#include "minorforge/seagull.hpp"
#include "oracles.hpp"

using namespace minorforge;

TEST_CASE("seagull recognition") {
  CHECK(is_seagull(oracle::path(3), 0, 1, 2));
  CHECK(is_seagull(oracle::path(3), 2, 0, 1));
  CHECK_FALSE(is_seagull(oracle::complete(3), 0, 1, 2));
  const Graph w = named("five_wheel");
  CHECK(is_seagull(w, 0, 1, 2));
  CHECK_FALSE(is_seagull(w, 0, 1, 5));
  CHECK_FALSE(is_seagull(w, 0, 0, 1));
  const auto s = orient_seagull(oracle::path(3), 2, 1, 0);
  REQUIRE(s.has_value());
  CHECK(s->a == 0);
  CHECK(s->mid == 1);
  CHECK(s->b == 2);
}

TEST_CASE("P3 partitions into itself") {
  const auto p = seagull_partition(oracle::path(3));
  REQUIRE(p.has_value());
  REQUIRE(p->triples.size() == 1);
  CHECK(p->triples[0].mid == 1);
}

TEST_CASE("empty graph has the empty partition") {
  const auto p = seagull_partition(Graph(0));
  REQUIRE(p.has_value());
  CHECK(p->triples.empty());
}

TEST_CASE("five-wheel has no two disjoint seagulls") {
  const Graph w = named("five_wheel");
  CHECK_FALSE(seagull_partition(w).has_value());
  CHECK(max_disjoint_seagulls_bruteforce(w) == 1);
}

TEST_CASE("twelve-vertex circulant instance splits into four seagulls") {
  const Graph g = named("circulant13_minus_one_complement");
  REQUIRE(g.vertex_count() == 12);
  CHECK(is_alpha_le_2(g));
  CHECK(oracle::omega(g) == 4);
  const auto p = seagull_partition(g);
  REQUIRE(p.has_value());
  CHECK(p->triples.size() == 4);
  CHECK(is_seagull_partition_of(g, *p, g.all_vertices()));
}

TEST_CASE("wrong order and size guard") {
  CHECK_THROWS_AS(seagull_partition(oracle::path(4)), Error);
  CHECK_THROWS_AS(max_disjoint_seagulls_bruteforce(oracle::complete(16)), Error);
}

TEST_CASE("brute-force counts") {
  CHECK(max_disjoint_seagulls_bruteforce(oracle::path(3)) == 1);
  CHECK(max_disjoint_seagulls_bruteforce(oracle::complete(6)) == 0);
  CHECK(max_disjoint_seagulls_bruteforce(oracle::cycle(6)) == 2);
}

TEST_CASE("partition exists exactly when brute force packs |V|/3 seagulls") {
  Philox rng(17, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(uniform_below(rng, 4));
    const Graph g = oracle::random_alpha2(3 * k, rng);
    const auto p = seagull_partition(g);
    const bool possible = oracle::max_disjoint_seagulls(g) == k;
    CHECK(p.has_value() == possible);
    if (p) CHECK(is_seagull_partition_of(g, *p, g.all_vertices()));
  }
}

TEST_CASE("backtracking alone decides when the construction is disabled") {
  Philox rng(19, 0);
  PackingOptions only_search;
  only_search.construction_attempts = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 1 + static_cast<int>(uniform_below(rng, 4));
    const Graph g = oracle::random_alpha2(3 * k, rng);
    const auto p = seagull_partition(g, only_search);
    CHECK(p.has_value() == (oracle::max_disjoint_seagulls(g) == k));
    if (p) CHECK(is_seagull_partition_of(g, *p, g.all_vertices()));
  }
}

TEST_CASE("clique number at most |V|/3 forces a partition") {
  Philox rng(23, 0);
  int tested = 0;
  for (int attempt = 0; attempt < 100000 && tested < 40; ++attempt) {
    const int k = 4 + static_cast<int>(attempt % 2);
    const Graph g = gen_tfp_complement(3 * k, rng);
    if (max_clique(g).size() > k) continue;
    ++tested;
    const auto p = seagull_partition(g);
    REQUIRE(p.has_value());
    CHECK(is_seagull_partition_of(g, *p, g.all_vertices()));
  }
  CHECK(tested == 40);
}

TEST_CASE("partition checker rejects overlaps, non-seagulls and wrong cover") {
  const Graph p6 = oracle::path(6);
  CHECK(is_seagull_partition_of(p6, {{{0, 1, 2}, {3, 4, 5}}}, p6.all_vertices()));
  CHECK_FALSE(is_seagull_partition_of(p6, {{{0, 1, 2}, {2, 3, 4}}}, p6.all_vertices()));
  CHECK_FALSE(is_seagull_partition_of(p6, {{{0, 1, 2}}}, p6.all_vertices()));
  CHECK_FALSE(is_seagull_partition_of(oracle::complete(3), {{{0, 1, 2}}}, VertexSet::full(3)));
}

TEST_CASE("serialised as one-based lines") {
  std::ostringstream out;
  write_seagulls(out, {{{0, 1, 2}, {3, 5, 4}}});
  CHECK(out.str() == "s 1 2 3\ns 4 6 5\n");
}
