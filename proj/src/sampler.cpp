#include "qfv/sampler.hpp"

#include <stdexcept>

namespace qfv {

uint64_t Sampler::rand_below(uint64_t n) { return n == 0 ? 0 : rng_() % n; }

int Sampler::rand_int(int lo, int hi) {
  return lo + static_cast<int>(rand_below(static_cast<uint64_t>(hi - lo + 1)));
}

FieldValue Sampler::nonzero_value(FieldDesc f) {
  if (f.is_rational()) {
    int num = rand_int(1, 9) * (rand_below(2) ? 1 : -1);
    int den = rand_int(1, 4);
    return FieldValue(f, Rational(BigInt(num), BigInt(den)));
  }
  return FieldValue::of_fp(f.p, 1 + rand_below(f.p - 1));
}

FieldValue Sampler::any_value(FieldDesc f) {
  if (f.is_rational()) {
    if (rand_below(10) == 0) return FieldValue::zero(f);
    return nonzero_value(f);
  }
  return FieldValue::of_fp(f.p, rand_below(f.p));
}

TorusElement Sampler::torus_element(const TiltingQuiver& tq, FieldDesc f, bool fix_base) {
  TorusElement t(f, tq.num_vertices());
  for (int v = 1; v < tq.num_vertices(); ++v) {
    if (fix_base && tq.is_base_vertex(v)) continue;
    t.set(v, nonzero_value(f));
  }
  return t;
}

Point Sampler::stable_v_point(const TiltingQuiver& tq, FieldDesc f, int zeros) {
  const int nrays = static_cast<int>(tq.base().arrows().size());
  if (zeros > nrays) zeros = nrays;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<FieldValue> base_vals;
    base_vals.reserve(static_cast<size_t>(nrays));
    for (int r = 0; r < nrays; ++r) base_vals.push_back(nonzero_value(f));
    for (int z = 0; z < zeros; ++z)
      base_vals[rand_below(static_cast<uint64_t>(nrays))] = FieldValue::zero(f);
    Point w(f, tq.num_arrows());
    for (int id = 0; id < tq.num_arrows(); ++id)
      w.set(id, base_vals[static_cast<size_t>(tq.arrow(id).ray)]);
    if (!is_unstable(tq, w)) return w;
  }
  throw std::runtime_error("stable_v_point: no stable zero pattern found");
}

Point Sampler::stable_orbit_point(const TiltingQuiver& tq, FieldDesc f, int zeros) {
  Point v = stable_v_point(tq, f, zeros);
  TorusElement t = torus_element(tq, f);
  return torus_act(tq, t, v);
}

}  // namespace qfv
