#include <doctest.h>

#include "qfv/bruteforce.hpp"
#include "qfv/ideals.hpp"
#include "quivers.hpp"

using namespace qfv;

TEST_CASE("relation locus enumeration on the projective line over F3") {
  TiltingQuiver tq = TiltingQuiver::build(p1_quiver());
  auto gens = ideal_R_generators(tq);
  long long members = 0, stable = 0;
  enumerate_points(tq, 3, gens, [&](long long, const Point& w) {
    ++members;
    if (!is_unstable(tq, w)) ++stable;
  });
  CHECK(members == 9);
  CHECK(stable == 8);
}

TEST_CASE("stable relation locus count on the plane over F2") {
  OracleReport rep = theorem_oracle(beilinson(2), 2);
  CHECK(rep.ambient_count == 64);
  CHECK(rep.stable_relation_count == 7);
  CHECK(rep.clean());
}

TEST_CASE("the theorem holds exhaustively over F3") {
  for (const Quiver& q : {p1_quiver(), beilinson(2), toy22_quiver()}) {
    OracleReport rep = theorem_oracle(q, 3);
    CHECK(rep.clean());
    CHECK(rep.normalize_successes == rep.stable_relation_count);
    CHECK(rep.normalize_failures == 0);
    CHECK(!rep.first_failure_index);
    CHECK(rep.stable_relation_count + rep.unstable_relation_count == rep.relation_locus_count);
  }
}

TEST_CASE("projective line over F3 normalizes trivially") {
  OracleReport rep = theorem_oracle(p1_quiver(), 3);
  CHECK(rep.stable_relation_count == 8);
  CHECK(rep.normalize_successes == 8);
  CHECK(rep.clean());
}

TEST_CASE("partitioned scans merge to the full report") {
  Quiver q = toy22_quiver();
  OracleReport full = theorem_oracle(q, 3);
  long long total = full.ambient_count;
  OracleReport merged;
  merged.quiver_id = full.quiver_id;
  merged.p = full.p;
  long long chunk = total / 4 + 1;
  for (long long lo = 0; lo < total; lo += chunk) {
    long long hi = std::min(total, lo + chunk);
    merged = merge_reports(merged, theorem_oracle(q, 3, kDefaultSearchCap, {{lo, hi}}));
  }
  CHECK(merged.ambient_count == full.ambient_count);
  CHECK(merged.relation_locus_count == full.relation_locus_count);
  CHECK(merged.stable_relation_count == full.stable_relation_count);
  CHECK(merged.normalize_successes == full.normalize_successes);
  CHECK(merged.clean());
}

TEST_CASE("oversized searches are refused") {
  CHECK_THROWS_AS(theorem_oracle(example33_quiver(), 3), SearchTooLarge);
  CHECK_THROWS_AS(theorem_oracle(toy22_quiver(), 3, 100), SearchTooLarge);
}
