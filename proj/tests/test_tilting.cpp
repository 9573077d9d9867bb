#include <doctest.h>

#include <set>

#include "quivers.hpp"

using namespace qfv;

namespace {

// Independent arrow-count oracle: for every (ray, head) pair test the raw
// componentwise box conditions on both endpoints.
int translate_count_oracle(const TiltingQuiver& tq) {
  int count = 0;
  for (int ray = 0; ray < static_cast<int>(tq.base().arrows().size()); ++ray) {
    CuboidVertex d = tq.du(ray);
    for (int v = 0; v < tq.num_vertices(); ++v) {
      CuboidVertex head = tq.vertex(v);
      CuboidVertex tail = head;
      for (size_t i = 0; i < tail.size(); ++i) tail[i] -= d[i];
      if (tq.in_cuboid(head) && tq.in_cuboid(tail)) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("total order compares at the largest differing index") {
  CHECK(compare_vertices({1, 0, 1}, {0, 1, 1}) == std::strong_ordering::less);
  CHECK(compare_vertices({2, 1, 0}, {0, 0, 1}) == std::strong_ordering::less);
  CHECK(compare_vertices({1, 1, 0}, {1, 1, 0}) == std::strong_ordering::equal);
  CHECK(compare_vertices({0, 1}, {1, 0}) == std::strong_ordering::greater);
}

TEST_CASE("cuboid vertices are sorted by the total order") {
  TiltingQuiver tq = TiltingQuiver::build(example33_quiver());
  CHECK(tq.num_vertices() == 12);
  CHECK(tq.vertex(0) == CuboidVertex{0, 0, 0});
  CHECK(tq.vertex(1) == CuboidVertex{1, 0, 0});
  CHECK(tq.vertex(2) == CuboidVertex{2, 0, 0});
  for (int v = 0; v + 1 < tq.num_vertices(); ++v)
    CHECK(compare_vertices(tq.vertex(v), tq.vertex(v + 1)) == std::strong_ordering::less);

  TiltingQuiver pn = TiltingQuiver::build(beilinson(4));
  CHECK(pn.num_vertices() == 5);
  for (int v = 0; v < 5; ++v) CHECK(pn.vertex(v) == CuboidVertex{v});

  CHECK(TiltingQuiver::build(toy22_quiver()).num_vertices() == 4);
}

TEST_CASE("arrow counts") {
  CHECK(TiltingQuiver::build(beilinson(2)).num_arrows() == 6);
  CHECK(TiltingQuiver::build(example33_quiver()).num_arrows() == 41);
  CHECK(TiltingQuiver::build(toy22_quiver()).num_arrows() == 7);
}

TEST_CASE("arrow set matches the translate oracle on random quivers") {
  Sampler s(101);
  for (int trial = 0; trial < 100; ++trial) {
    TiltingQuiver tq = TiltingQuiver::build(random_quiver(s));
    CHECK(tq.num_arrows() == translate_count_oracle(tq));
    // no duplicate (ray, head) pairs
    std::set<std::pair<int, int>> seen;
    for (int id = 0; id < tq.num_arrows(); ++id)
      CHECK(seen.insert({tq.arrow(id).ray, tq.arrow(id).head}).second);
  }
}

TEST_CASE("every arrow strictly increases the total order") {
  Sampler s(102);
  for (int trial = 0; trial < 100; ++trial) {
    TiltingQuiver tq = TiltingQuiver::build(random_quiver(s));
    for (int id = 0; id < tq.num_arrows(); ++id) {
      const auto& a = tq.arrow(id);
      CHECK(compare_vertices(tq.vertex(a.tail), tq.vertex(a.head)) == std::strong_ordering::less);
      CHECK(a.tail < a.head);
    }
  }
}

TEST_CASE("arrows into base vertices are the base arrows") {
  Sampler s(103);
  for (int trial = 0; trial < 100; ++trial) {
    Quiver q = random_quiver(s);
    TiltingQuiver tq = TiltingQuiver::build(q);
    RankData ranks = rank_sums(q);
    for (int j = 1; j <= tq.length(); ++j) {
      int ej = tq.base_vertex_rank(j);
      const auto& in = tq.arrows_into(ej);
      CHECK(static_cast<int>(in.size()) == ranks.s(j));
      for (int id : in) {
        CHECK(tq.base().arrow(tq.arrow(id).ray).head == j);
        CHECK(tq.base_arrow_id(tq.arrow(id).ray) == id);
      }
    }
  }
}

TEST_CASE("example tilting quiver has the published incoming arrows at (0,1,1)") {
  TiltingQuiver tq = TiltingQuiver::build(example33_quiver());
  int k = tq.full_rank_of({0, 1, 1});
  const auto& in = tq.arrows_into(k);
  REQUIRE(in.size() == 3);
  std::set<std::pair<int, CuboidVertex>> got;
  for (int id : in) got.insert({tq.arrow(id).ray, tq.vertex(tq.arrow(id).tail)});
  std::set<std::pair<int, CuboidVertex>> want = {
      {5, {1, 1, 0}},  // cyan translate
      {3, {0, 0, 1}},  // red translate
      {4, {1, 0, 1}},  // blue translate
  };
  CHECK(got == want);
}

TEST_CASE("truncation") {
  TiltingQuiver tq = TiltingQuiver::build(example33_quiver());

  TiltingQuiver t1 = tq.truncate({0, 1, 1});
  CHECK(t1.num_vertices() == 10);
  CHECK(t1.is_truncated());

  TiltingQuiver t0 = tq.truncate({0, 0, 0});
  CHECK(t0.num_vertices() == 1);
  CHECK(t0.num_arrows() == 0);

  TiltingQuiver tfull = tq.truncate({2, 1, 1});
  CHECK(tfull.num_vertices() == 12);
  CHECK(tfull.num_arrows() == 41);
  CHECK(!tfull.is_truncated());

  // arrows retained iff both endpoints retained; ids are stable
  for (int id = 0; id < t1.num_arrows(); ++id) CHECK(t1.arrow(id) == tq.arrow(id));
  for (int id = 0; id < t1.num_arrows(); ++id) {
    CHECK(t1.arrow(id).head < t1.num_vertices());
    CHECK(t1.arrow(id).tail < t1.num_vertices());
  }
  for (int id = t1.num_arrows(); id < tq.num_arrows(); ++id)
    CHECK(tq.arrow(id).head >= t1.num_vertices());
}

TEST_CASE("truncation is monotone in the bound") {
  Sampler s(104);
  for (int trial = 0; trial < 50; ++trial) {
    TiltingQuiver tq = TiltingQuiver::build(random_quiver(s));
    int a = static_cast<int>(s.rand_below(static_cast<uint64_t>(tq.num_vertices())));
    int b = static_cast<int>(s.rand_below(static_cast<uint64_t>(tq.num_vertices())));
    if (a > b) std::swap(a, b);
    TiltingQuiver ta = tq.truncate(tq.vertex(a));
    TiltingQuiver tb = tq.truncate(tq.vertex(b));
    CHECK(ta.num_vertices() <= tb.num_vertices());
    CHECK(ta.num_arrows() <= tb.num_arrows());
    for (int id = 0; id < ta.num_arrows(); ++id) CHECK(ta.arrow(id) == tb.arrow(id));
  }
}

TEST_CASE("tilting construction rejects non-topological labels") {
  // acyclic with unique source, but vertex labels run against the arrows
  Quiver q = validate_quiver(3, {{0, 2}, {0, 2}, {2, 1}, {2, 1}});
  CHECK_THROWS_AS(TiltingQuiver::build(q), std::invalid_argument);
}

TEST_CASE("arrow keys round trip") {
  TiltingQuiver tq = TiltingQuiver::build(example33_quiver());
  for (int id = 0; id < tq.num_arrows(); ++id)
    CHECK(tq.parse_arrow_key(tq.arrow_key(id)) == id);
  CHECK(tq.parse_arrow_key("r4@(0,1,1)") == tq.find_arrow(3, tq.full_rank_of({0, 1, 1})));
  CHECK(tq.parse_arrow_key("r1@(0,0,0)") == -1);   // no translate with head e_0
  CHECK(tq.parse_arrow_key("r99@(0,0,0)") == -1);
  CHECK(tq.parse_arrow_key("nonsense") == -1);
}
