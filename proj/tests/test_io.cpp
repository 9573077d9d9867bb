#include <doctest.h>

#include "qfv/io.hpp"
#include "qfv/sampler.hpp"
#include "quivers.hpp"

using namespace qfv;

TEST_CASE("quiver json round trip") {
  json j = {{"vertices", 4}, {"arrows", {{0, 1}, {0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}}};
  Quiver q = quiver_from_json(j);
  CHECK(q.vertex_count() == 4);
  CHECK(quiver_to_json(q) == j);
}

TEST_CASE("tilting export round trips and is deterministic") {
  TiltingQuiver tq = TiltingQuiver::build(example33_quiver());
  json j = tilting_to_json(tq);
  CHECK(j.at("vertices").size() == 12);
  CHECK(j.at("arrows").size() == 41);
  TiltingQuiver back = tilting_from_json(j);
  CHECK(tilting_to_json(back) == j);
  CHECK(j.dump() == tilting_to_json(TiltingQuiver::build(example33_quiver())).dump());

  json trunc = tilting_to_json(tq.truncate({0, 1, 1}));
  CHECK(trunc.at("vertices").size() == 10);
  TiltingQuiver back_trunc = tilting_from_json(trunc);
  CHECK(back_trunc.num_vertices() == 10);
  CHECK(tilting_to_json(back_trunc) == trunc);
}

TEST_CASE("point and torus json round trips") {
  TiltingQuiver tq = TiltingQuiver::build(example33_quiver());
  Sampler s(501);
  Point w = s.stable_orbit_point(tq, FieldDesc::rationals(), 1);
  CHECK(point_from_json(tq, point_to_json(tq, w)) == w);

  TorusElement t = s.torus_element(tq, FieldDesc::rationals());
  CHECK(torus_from_json(tq, torus_to_json(tq, t)) == t);

  Point wp = s.stable_orbit_point(tq, FieldDesc::prime(5), 0);
  json j = point_to_json(tq, wp);
  CHECK(j.at("field") == "F5");
  CHECK(point_from_json(tq, j) == wp);

  json missing = {{"field", "Q"}, {"values", json::object()}};
  CHECK_THROWS(point_from_json(tq, missing));
}

TEST_CASE("normalization trace serializes") {
  TiltingQuiver tq = TiltingQuiver::build(beilinson(2));
  Point w(FieldDesc::rationals(), 6);
  for (int r = 0; r < 3; ++r) {
    w.set(tq.find_arrow(r, 1), FieldValue(Rational(r + 1)));
    w.set(tq.find_arrow(r, 2), FieldValue(Rational(2 * (r + 1))));
  }
  json j = normalization_to_json(tq, normalize(tq, w, true));
  CHECK(j.at("torus").at("values").at("(2)") == "1/2");
  CHECK(j.at("trace").size() == 2);
  CHECK(j.at("trace").at(1).at("case").at("variant") == "BaseChain");
  CHECK(j.at("trace").at(1).at("witnesses").size() == 2);
}

TEST_CASE("error serialization carries certificates") {
  TiltingQuiver tq = TiltingQuiver::build(beilinson(2));
  Point bad(FieldDesc::rationals(), 6);
  for (int r = 0; r < 3; ++r) {
    bad.set(tq.find_arrow(r, 1), FieldValue(Rational(r + 1)));
    bad.set(tq.find_arrow(r, 2), FieldValue(Rational(2 * (r + 1))));
  }
  bad.set(tq.find_arrow(2, 2), FieldValue(Rational(7)));
  try {
    normalize(tq, bad, true);
    FAIL("expected a violation");
  } catch (const std::exception& e) {
    json j = error_to_json(&tq, e);
    CHECK(j.at("error") == "InconsistentAtVertex");
    CHECK(j.at("ray") == 3);
    CHECK(j.at("expected") == "3");
    CHECK(j.at("found") == "7/2");
    CHECK(j.contains("binomial"));
  }
}

TEST_CASE("diagram emitters are deterministic and complete") {
  TiltingQuiver tq = TiltingQuiver::build(example33_quiver());
  std::string dot = emit_dot(tq);
  CHECK(dot == emit_dot(tq));
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 12 + 41 + 4);  // nodes + edges + frame
  std::string tikz = emit_tikz(tq);
  CHECK(tikz.find("\\begin{tikzpicture}") == 0);
  CHECK(std::count(tikz.begin(), tikz.end(), '\n') == 12 + 41 + 2);

  TiltingQuiver t0 = tq.truncate({0, 0, 0});
  std::string d0 = emit_dot(t0);
  CHECK(d0.find("->") == std::string::npos);
  CHECK(d0.find("(0,0,0)") != std::string::npos);

  TiltingQuiver pn = TiltingQuiver::build(beilinson(3));
  std::string dn = emit_dot(pn);
  CHECK(std::count(dn.begin(), dn.end(), '\n') == 4 + 12 + 4);
}

TEST_CASE("oracle report serializes") {
  OracleReport rep = theorem_oracle(p1_quiver(), 3);
  json j = oracle_report_to_json(rep);
  CHECK(j.at("stable_relation_count") == 8);
  CHECK(j.at("normalize_failures") == 0);
}
