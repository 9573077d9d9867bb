#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "qfv/normalize.hpp"

namespace qfv {

struct SearchTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultSearchCap = 100'000'000;

// Exhaustive scan statistics for one (quiver, prime) instance.
struct OracleReport {
  std::string quiver_id;
  uint32_t p = 0;
  long long ambient_count = 0;
  long long relation_locus_count = 0;        // |V(I_R)|
  long long unstable_relation_count = 0;     // |V(I_R) ∩ V(B)|
  long long stable_relation_count = 0;       // |V(I_R) \ V(B)|
  long long normalize_successes = 0;
  long long normalize_failures = 0;
  long long transport_violations = 0;        // torus did not carry input to output exactly
  long long base_constancy_violations = 0;
  long long lattice_violations = 0;          // lattice binomial nonzero on V(I_R)\V(B)
  long long stability_equivalence_violations = 0;
  std::optional<long long> first_failure_index;  // enumeration index of an exemplar

  bool clean() const {
    return normalize_failures == 0 && transport_violations == 0 &&
           base_constancy_violations == 0 && lattice_violations == 0 &&
           stability_equivalence_violations == 0;
  }
};

// Componentwise sum; exemplar merged by the smallest-index rule.
OracleReport merge_reports(const OracleReport& a, const OracleReport& b);

// Streams the points of the relation locus over F_p in lexicographic order
// over the canonical arrow order (arrow 0 most significant). Throws
// SearchTooLarge when p^{arrows} exceeds the cap.
void enumerate_points(const TiltingQuiver& tq, uint32_t p, const std::vector<Binomial>& gens,
                      const std::function<void(long long index, const Point&)>& on_member,
                      long long cap = kDefaultSearchCap);

// Exhaustive check of the normalization theorem and the stability
// equivalence over F_p. Scans [lo, hi) of the ambient enumeration when
// given; the full range otherwise.
OracleReport theorem_oracle(const Quiver& q, uint32_t p, long long cap = kDefaultSearchCap,
                            std::optional<std::pair<long long, long long>> range = std::nullopt,
                            const std::string& quiver_id = "quiver");

}  // namespace qfv
