#pragma once

#include <cstdint>
#include <random>

#include "qfv/point.hpp"

namespace qfv {

// Deterministic sampling helpers. All draws go through rand_below so output
// is reproducible across platforms for a fixed seed.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  uint64_t rand_below(uint64_t n);  // uniform-ish in [0, n)
  int rand_int(int lo, int hi);     // inclusive

  // Nonzero value; rationals have numerator in [-9,9]\{0}, denominator in [1,4].
  FieldValue nonzero_value(FieldDesc f);
  // Any value; zero with probability roughly 1/(p or 10).
  FieldValue any_value(FieldDesc f);

  // Random torus element (gauge t(e_0) = 1); optionally trivial on all base
  // vertices.
  TorusElement torus_element(const TiltingQuiver& tq, FieldDesc f, bool fix_base = false);

  // Base-constant point with `zeros` rays zeroed out, resampled until the
  // result is stable. zeros is clamped to the ray count.
  Point stable_v_point(const TiltingQuiver& tq, FieldDesc f, int zeros);

  // A stable relation-locus point: random stable v-point moved by a random
  // torus element.
  Point stable_orbit_point(const TiltingQuiver& tq, FieldDesc f, int zeros);

 private:
  std::mt19937_64 rng_;
};

}  // namespace qfv
