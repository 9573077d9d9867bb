// Acceptance suite: one check per release criterion, exact arithmetic
// throughout, one pass/fail line each. Usage: qfv_acceptance [n]

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qfv/bruteforce.hpp"
#include "qfv/io.hpp"
#include "quivers.hpp"
#include "witness_check.hpp"

using namespace qfv;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

Point plane_point(const TiltingQuiver& tq, std::vector<long long> s1, std::vector<long long> s2) {
  Point w(FieldDesc::rationals(), tq.num_arrows());
  for (int r = 0; r < 3; ++r) {
    w.set(tq.find_arrow(r, 1), FieldValue(Rational(s1[static_cast<size_t>(r)])));
    w.set(tq.find_arrow(r, 2), FieldValue(Rational(s2[static_cast<size_t>(r)])));
  }
  return w;
}

// ---- criterion 1: the staircase generators, exactly, for n = 2 and 3 ----

void criterion_beilinson_exactness() {
  {
    TiltingQuiver tq = TiltingQuiver::build(beilinson(2));
    std::vector<Binomial> expect;
    for (int r = 0; r < 3; ++r)
      for (int s = r + 1; s < 3; ++s) expect.push_back(make_binomial({r, 3 + s}, {s, 3 + r}));
    std::sort(expect.begin(), expect.end());
    require(ideal_R_generators(tq) == expect, "n=2 generator set differs from the 3 staircase relations");
  }
  {
    TiltingQuiver tq = TiltingQuiver::build(beilinson(3));
    std::vector<Binomial> expect;
    for (int m = 0; m < 2; ++m)
      for (int r = 0; r < 4; ++r)
        for (int s = r + 1; s < 4; ++s)
          expect.push_back(
              make_binomial({4 * m + r, 4 * (m + 1) + s}, {4 * m + s, 4 * (m + 1) + r}));
    std::sort(expect.begin(), expect.end());
    require(ideal_R_generators(tq, 2) == expect,
            "n=3 generator set differs from the 12 staircase relations");
  }
}

// ---- criterion 2: the 12-vertex example quiver ----

void criterion_example_structure() {
  TiltingQuiver tq = TiltingQuiver::build(example33_quiver());
  require(tq.num_vertices() == 12, "expected 12 vertices");
  require(tq.num_arrows() == 41, "expected 41 arrows");
  int k = tq.full_rank_of({0, 1, 1});
  const auto& in = tq.arrows_into(k);
  require(in.size() == 3, "expected 3 arrows into (0,1,1)");
  std::set<CuboidVertex> tails;
  for (int id : in) tails.insert(tq.vertex(tq.arrow(id).tail));
  require(tails == std::set<CuboidVertex>{{1, 1, 0}, {0, 0, 1}, {1, 0, 1}},
          "tails at (0,1,1) are not {(1,1,0),(0,0,1),(1,0,1)}");
}

// ---- criterion 3: exhaustive theorem oracle ----

void criterion_oracle() {
  struct Run {
    Quiver q;
    uint32_t p;
    const char* name;
  };
  std::vector<Run> runs = {{p1_quiver(), 3, "P1"},      {beilinson(2), 3, "P2"},
                           {toy22_quiver(), 3, "toy22"}, {p1_quiver(), 5, "P1"},
                           {beilinson(2), 5, "P2"}};
  for (const auto& run : runs) {
    OracleReport rep = theorem_oracle(run.q, run.p, kDefaultSearchCap, std::nullopt, run.name);
    require(rep.normalize_failures == 0,
            std::string(run.name) + "/F" + std::to_string(run.p) + ": normalize failures");
    require(rep.clean(), std::string(run.name) + "/F" + std::to_string(run.p) +
                             ": transport, base-constancy, lattice or stability violations");
    require(rep.normalize_successes == rep.stable_relation_count,
            std::string(run.name) + ": successes != stable locus size");
  }
  require(theorem_oracle(p1_quiver(), 3).stable_relation_count == 8,
          "P1/F3 stable relation locus is not 8");
  require(theorem_oracle(beilinson(2), 2).stable_relation_count == 7,
          "P2/F2 stable relation locus is not 7");
}

// ---- criterion 4: certification soundness on 1000 seeded rational points ----

void criterion_certification() {
  TiltingQuiver tq = TiltingQuiver::build(example33_quiver());
  Sampler s(20260808);
  for (int trial = 0; trial < 1000; ++trial) {
    Point w = s.stable_orbit_point(tq, FieldDesc::rationals(), trial % 4);
    NormalizationResult res = normalize(tq, w, /*certify=*/true);
    require(torus_act(tq, res.torus, w) == res.normalized,
            "torus does not transport input to output");
    require(v_point(tq, res.normalized) == res.normalized, "output not base-constant");
    for (const auto& tr : res.trace)
      for (const auto& wit : tr.witnesses)
        require(witness_is_sound(tq, tr.vertex, w, wit),
                "unsound witness at trial " + std::to_string(trial));
  }
}

// ---- criterion 5: stability equivalence over all ambient F3 points ----

void criterion_stability_equivalence() {
  for (const Quiver& q : {beilinson(2), toy22_quiver()}) {
    TiltingQuiver tq = TiltingQuiver::build(q);
    long long total = 1;
    for (int i = 0; i < tq.num_arrows(); ++i) total *= 3;
    Point w(FieldDesc::prime(3), tq.num_arrows());
    for (long long idx = 0; idx < total; ++idx) {
      long long x = idx;
      for (int id = 0; id < tq.num_arrows(); ++id) {
        w.set(id, FieldValue::of_fp(3, static_cast<uint64_t>(x % 3)));
        x /= 3;
      }
      require(is_unstable(tq, w) == !is_zero_generated(tq, w),
              "stability equivalence fails at index " + std::to_string(idx));
    }
  }
}

// ---- criterion 6: negative certificate ----

void criterion_negative_certificate() {
  TiltingQuiver tq = TiltingQuiver::build(beilinson(2));
  Point bad = plane_point(tq, {1, 2, 3}, {2, 4, 7});
  try {
    normalize(tq, bad, /*certify=*/true);
    throw Failure("normalization accepted a non-member point");
  } catch (const InconsistentAtVertexError& e) {
    require(tq.vertex(e.vertex) == CuboidVertex{2}, "violation reported at the wrong vertex");
    require(e.violated.has_value(), "no violated generator carried");
    require(evaluate_binomial(*e.violated, bad) == FieldValue(Rational(1)),
            "violated generator does not evaluate to exactly 1");
    // and it is one of the staircase generators
    auto gens = ideal_R_generators(tq);
    require(std::find(gens.begin(), gens.end(), *e.violated) != gens.end(),
            "carried binomial is not a relation generator");
  }
}

// ---- criterion 7: integer kernel of the degree map ----

void criterion_kernel() {
  TiltingQuiver tq = TiltingQuiver::build(beilinson(2));
  IntMat pi = pi_matrix(tq);
  LatticeBasis basis = kernel_basis(pi);
  require(basis.rank() == 2, "kernel rank of the plane quiver is not 2");
  for (const auto& u : basis.vectors)
    for (const auto& x : pi.mul_vec(u)) require(x.is_zero(), "basis vector not in the kernel");
  require(basis.contains({1, -1, 0, -1, 1, 0}), "swap relation missing from the kernel lattice");
  require(kernel_basis(pi_matrix(TiltingQuiver::build(p1_quiver()))).rank() == 0,
          "projective line kernel is not trivial");
}

// ---- criterion 8: invariant property suite, 100+ seeds each ----

void criterion_invariants() {
  {
    Sampler s(81);
    for (int trial = 0; trial < 100; ++trial) {
      TiltingQuiver tq = TiltingQuiver::build(random_quiver(s));
      for (int id = 0; id < tq.num_arrows(); ++id)
        require(compare_vertices(tq.vertex(tq.arrow(id).tail), tq.vertex(tq.arrow(id).head)) ==
                    std::strong_ordering::less,
                "arrow does not increase the total order");
    }
  }
  {
    Sampler s(82);
    for (int trial = 0; trial < 100; ++trial) {
      TiltingQuiver tq = TiltingQuiver::build(random_quiver(s));
      FieldDesc f = FieldDesc::rationals();
      Point w(f, tq.num_arrows());
      for (int id = 0; id < tq.num_arrows(); ++id) w.set(id, s.any_value(f));
      TorusElement identity(f, tq.num_vertices());
      require(torus_act(tq, identity, w) == w, "identity scaling moved a point");
      TorusElement t1 = s.torus_element(tq, f), t2 = s.torus_element(tq, f);
      require(torus_act(tq, t2, torus_act(tq, t1, w)) ==
                  torus_act(tq, torus_compose(t2, t1), w),
              "composition law fails");
    }
  }
  {
    Sampler s(83);
    for (int trial = 0; trial < 100; ++trial) {
      TiltingQuiver tq = TiltingQuiver::build(random_quiver(s));
      Point w(FieldDesc::rationals(), tq.num_arrows());
      for (int id = 0; id < tq.num_arrows(); ++id) w.set(id, s.any_value(FieldDesc::rationals()));
      Point v = v_point(tq, w);
      require(v_point(tq, v) == v, "base-constant projection is not idempotent");
    }
  }
  {
    Sampler s(84);
    for (int trial = 0; trial < 100; ++trial) {
      TiltingQuiver tq = TiltingQuiver::build(random_quiver(s));
      auto gens = ideal_R_generators(tq, 4);
      auto lat = lattice_binomials(kernel_basis(pi_matrix(tq)));
      Point v = s.stable_v_point(tq, FieldDesc::rationals(), s.rand_int(0, 2));
      require(!evaluate_generators(v, gens), "relation generator nonzero on a base-constant point");
      require(!evaluate_generators(v, lat), "lattice binomial nonzero on a base-constant point");
    }
  }
}

struct Criterion {
  int n;
  const char* description;
  double limit_seconds;
  std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "staircase generator sets for n=2 and n=3", 1.0, criterion_beilinson_exactness},
      {2, "12 vertices, 41 arrows, incoming tails at (0,1,1)", 1.0, criterion_example_structure},
      {3, "exhaustive oracle over F3/F5 with exact transport", 30.0, criterion_oracle},
      {4, "certified normalization of 1000 seeded rational points", 60.0, criterion_certification},
      {5, "stability equivalence over all ambient F3 points", 10.0, criterion_stability_equivalence},
      {6, "negative certificate with generator value exactly 1", 1.0, criterion_negative_certificate},
      {7, "integer kernel of the degree map", 1.0, criterion_kernel},
      {8, "order, action, projection and vanishing invariants", 30.0, criterion_invariants},
  };

  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_passed = true;
  for (const auto& c : criteria) {
    if (only && c.n != only) continue;
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && elapsed > c.limit_seconds)
      failure = "exceeded the " + std::to_string(c.limit_seconds) + "s budget";
    if (failure.empty()) {
      std::printf("[PASS] criterion %d (%.2fs): %s\n", c.n, elapsed, c.description);
    } else {
      std::printf("[FAIL] criterion %d (%.2fs): %s — %s\n", c.n, elapsed, c.description,
                  failure.c_str());
      all_passed = false;
    }
  }
  return all_passed ? 0 : 1;
}
