#include <doctest.h>

#include "minorforge/vertex_set.hpp"

using minorforge::VertexSet;

TEST_CASE("insert, erase and membership across word boundaries") {
  VertexSet s(130);
  for (int v : {0, 63, 64, 127, 129}) s.insert(v);
  CHECK(s.size() == 5);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  s.erase(64);
  CHECK(s.members() == std::vector<int>{0, 63, 127, 129});
  CHECK(s.first() == 0);
  CHECK(s.next(1) == 63);
  CHECK(s.next(128) == 129);
  CHECK(s.next(130) == -1);
}

TEST_CASE("complement stays inside the universe") {
  VertexSet s(70, {1, 69});
  const VertexSet c = s.complement();
  CHECK(c.size() == 68);
  CHECK_FALSE(c.contains(69));
  CHECK((s | c) == VertexSet::full(70));
  CHECK((s & c).empty());
}

TEST_CASE("set algebra") {
  const VertexSet a(10, {1, 2, 3});
  const VertexSet b(10, {3, 4});
  CHECK((a - b).members() == std::vector<int>{1, 2});
  CHECK(a.intersection_size(b) == 1);
  CHECK(a.intersects(b));
  CHECK(VertexSet(10, {2, 3}).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
}

TEST_CASE("lexicographic order compares sorted member lists") {
  CHECK(VertexSet::lex_less(VertexSet(6, {0, 5}), VertexSet(6, {1, 2})));
  CHECK(VertexSet::lex_less(VertexSet(6, {0, 1}), VertexSet(6, {0, 2})));
  CHECK_FALSE(VertexSet::lex_less(VertexSet(6, {0, 2}), VertexSet(6, {0, 2})));
}

TEST_CASE("iteration visits members in order") {
  const VertexSet s(200, {3, 100, 150, 199});
  std::vector<int> seen;
  for (int v : s) seen.push_back(v);
  CHECK(seen == s.members());
}
