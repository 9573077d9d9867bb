#include "qfv/bruteforce.hpp"

#include "qfv/ideals.hpp"

namespace qfv {

namespace {

long long checked_pow(uint32_t p, int e, long long cap) {
  long long v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > cap / p)
      throw SearchTooLarge("ambient point count " + std::to_string(p) + "^" + std::to_string(e) +
                           " exceeds cap " + std::to_string(cap));
    v *= p;
  }
  return v;
}

void index_to_point(long long index, uint32_t p, Point& w) {
  // arrow 0 is the most significant digit
  for (int id = w.size(); id-- > 0;) {
    w.set(id, FieldValue::of_fp(p, static_cast<uint64_t>(index % p)));
    index /= p;
  }
}

}  // namespace

OracleReport merge_reports(const OracleReport& a, const OracleReport& b) {
  OracleReport m = a;
  m.ambient_count += b.ambient_count;
  m.relation_locus_count += b.relation_locus_count;
  m.unstable_relation_count += b.unstable_relation_count;
  m.stable_relation_count += b.stable_relation_count;
  m.normalize_successes += b.normalize_successes;
  m.normalize_failures += b.normalize_failures;
  m.transport_violations += b.transport_violations;
  m.base_constancy_violations += b.base_constancy_violations;
  m.lattice_violations += b.lattice_violations;
  m.stability_equivalence_violations += b.stability_equivalence_violations;
  if (b.first_failure_index &&
      (!m.first_failure_index || *b.first_failure_index < *m.first_failure_index))
    m.first_failure_index = b.first_failure_index;
  return m;
}

void enumerate_points(const TiltingQuiver& tq, uint32_t p, const std::vector<Binomial>& gens,
                      const std::function<void(long long, const Point&)>& on_member,
                      long long cap) {
  long long total = checked_pow(p, tq.num_arrows(), cap);
  Point w(FieldDesc::prime(p), tq.num_arrows());
  for (long long i = 0; i < total; ++i) {
    index_to_point(i, p, w);
    if (!evaluate_generators(w, gens)) on_member(i, w);
  }
}

OracleReport theorem_oracle(const Quiver& q, uint32_t p, long long cap,
                            std::optional<std::pair<long long, long long>> range,
                            const std::string& quiver_id) {
  TiltingQuiver tq = TiltingQuiver::build(q);
  std::vector<Binomial> gens = ideal_R_generators(tq);
  std::vector<Binomial> lattice = lattice_binomials(kernel_basis(pi_matrix(tq)));

  OracleReport rep;
  rep.quiver_id = quiver_id;
  rep.p = p;
  long long total = checked_pow(p, tq.num_arrows(), cap);
  long long lo = range ? range->first : 0;
  long long hi = range ? range->second : total;

  Point w(FieldDesc::prime(p), tq.num_arrows());
  for (long long i = lo; i < hi; ++i) {
    index_to_point(i, p, w);
    ++rep.ambient_count;

    bool unstable = is_unstable(tq, w);
    if (unstable == is_zero_generated(tq, w)) {
      ++rep.stability_equivalence_violations;
      if (!rep.first_failure_index) rep.first_failure_index = i;
    }

    if (evaluate_generators(w, gens)) continue;  // not on the relation locus
    ++rep.relation_locus_count;
    if (unstable) {
      ++rep.unstable_relation_count;
      continue;
    }
    ++rep.stable_relation_count;

    // the theorem: the lattice binomials vanish on the stable relation locus
    for (const auto& b : lattice)
      if (!evaluate_binomial(b, w).is_zero()) {
        ++rep.lattice_violations;
        if (!rep.first_failure_index) rep.first_failure_index = i;
        break;
      }

    try {
      NormalizationResult res = normalize(tq, w, /*certify=*/true);
      ++rep.normalize_successes;
      if (!(torus_act(tq, res.torus, w) == res.normalized)) {
        ++rep.transport_violations;
        if (!rep.first_failure_index) rep.first_failure_index = i;
      }
      if (!(v_point(tq, res.normalized) == res.normalized)) {
        ++rep.base_constancy_violations;
        if (!rep.first_failure_index) rep.first_failure_index = i;
      }
    } catch (const NormalizeError&) {
      ++rep.normalize_failures;
      if (!rep.first_failure_index) rep.first_failure_index = i;
    }
  }
  return rep;
}

}  // namespace qfv
