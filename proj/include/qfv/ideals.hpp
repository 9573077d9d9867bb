#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qfv/intmat.hpp"
#include "qfv/tilting.hpp"

namespace qfv {

// A composable chain of tilting-quiver arrows. The total order increases
// strictly along any path, so a path never repeats an arrow and its support
// set determines it.
struct Path {
  std::vector<int> arrow_ids;
};

// A monomial in the arrow coordinates: sorted arrow ids with multiplicity.
using Monomial = std::vector<int>;

// Pair of monomials with the lexicographically smaller one first.
struct Binomial {
  Monomial lhs, rhs;
  bool operator==(const Binomial&) const = default;
  auto operator<=>(const Binomial&) const = default;
};

Binomial make_binomial(Monomial a, Monomial b);  // canonicalizes; throws if a == b

// Paths grouped by shared tail, head and labeling divisor (ray multiset).
struct PathGroup {
  int tail = 0;
  int head = 0;
  std::vector<int> divisor;  // sorted ray indices with multiplicity
  std::vector<Path> paths;
};

struct PathExplosion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultPathCap = 10'000'000;

// All paths of length >= 1 (up to max_len when given), grouped; groups of
// size one are retained. Group order and in-group path order are canonical.
std::vector<PathGroup> path_groups(const TiltingQuiver& tq,
                                   std::optional<int> max_len = std::nullopt,
                                   long long cap = kDefaultPathCap);

// Generators of the path-pair binomial ideal: for each group, the
// differences (first support monomial - each other), deduplicated, in
// canonical order. Vanishing cuts out exactly the relation locus; no
// minimalization is attempted.
std::vector<Binomial> ideal_R_generators(const TiltingQuiver& tq,
                                         std::optional<int> max_len = std::nullopt,
                                         long long cap = kDefaultPathCap);

// One component per vertex j != e_0: the ids of the arrows with head j.
// The irrelevant ideal is the intersection of the generated monomial ideals.
std::vector<std::vector<int>> irrelevant_ideal(const TiltingQuiver& tq);

// The degree map: one column per arrow in canonical order; rows are the
// vertex characteristic block (head minus tail) followed by the ray block.
IntMat pi_matrix(const TiltingQuiver& tq);

// Canonical basis of the integer kernel lattice of pi.
struct LatticeBasis {
  std::vector<std::vector<BigInt>> vectors;  // Hermite-canonical rows
  int rank() const { return static_cast<int>(vectors.size()); }
  bool contains(const std::vector<BigInt>& v) const { return in_row_lattice(vectors, v); }
};

LatticeBasis kernel_basis(const IntMat& pi);

// One binomial y^{u+} - y^{u-} per basis vector.
std::vector<Binomial> lattice_binomials(const LatticeBasis& basis);

}  // namespace qfv
