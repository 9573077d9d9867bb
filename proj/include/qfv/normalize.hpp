#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfv/point.hpp"

namespace qfv {

// Which branch of the induction handles a vertex, with the quiver indices
// the branch works with. delta is the smallest nonzero coordinate index of
// the vertex; beta/alpha are head/tail of the chosen ray's base arrow; gamma
// is the tail of the ray chosen at e_delta. xi/eta appear only when
// delta == beta and the vertex has a second nonzero coordinate; epsilon only
// when the branch needs a length-3 or length-4 relation.
enum class CaseVariant {
  BaseChain,
  NothingToProve,
  Case1,
  Case2SameAsCase1,
  Case2A,
  Case2B_sBig,
  Case2B_s2,
};

const char* case_variant_name(CaseVariant v);

struct CaseTag {
  CaseVariant variant = CaseVariant::Case1;
  int delta = 0;
  int beta = 0;
  int alpha = 0;
  int gamma = 0;
  std::optional<int> xi, eta, epsilon;
};

enum class WitnessShape { Rectangle, Hexagon, Octagon };

const char* witness_shape_name(WitnessShape s);

// A pair of equal-divisor paths to the induction vertex certifying one
// incoming-arrow equality. Both paths live in the truncated quiver below
// the vertex; the binomial is their support difference.
struct RelationWitness {
  WitnessShape shape = WitnessShape::Rectangle;
  std::vector<int> rays;        // the 2/3/4 substituted rays, in branch order
  std::vector<int> cycle;       // vertex ranks around the shape
  std::vector<int> path_a;      // arrow ids, composition order
  std::vector<int> path_b;
  Binomial binomial;
};

struct NormalizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnstableInputError : NormalizeError {
  UnstableInputError() : NormalizeError("input point is unstable") {}
};

struct ZeroReferenceError : NormalizeError {
  int vertex;
  int ray;
  ZeroReferenceError(int v, int r, const std::string& what) : NormalizeError(what), vertex(v), ray(r) {}
};

struct InconsistentAtVertexError : NormalizeError {
  int vertex;
  int ray;
  FieldValue expected, found;
  std::optional<Binomial> violated;  // present in certify mode
  InconsistentAtVertexError(int v, int r, FieldValue e, FieldValue f, std::optional<Binomial> b,
                            const std::string& what)
      : NormalizeError(what), vertex(v), ray(r), expected(std::move(e)), found(std::move(f)),
        violated(std::move(b)) {}
};

struct WitnessConstructionFailedError : NormalizeError {
  int vertex;
  int ray;
  CuboidVertex missing;
  WitnessConstructionFailedError(int v, int r, CuboidVertex m, const std::string& what)
      : NormalizeError(what), vertex(v), ray(r), missing(std::move(m)) {}
};

struct VertexTrace {
  int vertex = 0;                // rank
  int rho = -1;                  // chosen ray
  FieldValue t;                  // scaling applied at this vertex
  std::optional<CaseTag> tag;    // certify mode, non-base vertices
  std::vector<RelationWitness> witnesses;
};

struct NormalizationResult {
  TorusElement torus;
  Point normalized;
  std::vector<VertexTrace> trace;
};

// Classification of the induction step at a vertex, given the table of rays
// chosen at the preceding vertices (indexed by vertex rank, -1 = unset).
CaseTag classify_case(const TiltingQuiver& tq, int k_rank, int rho_k,
                      const std::vector<int>& chosen);

// The branch-prescribed witness for incoming ray `rho` != rho(k) at the
// vertex. Throws WitnessConstructionFailedError if the prescribed shapes do
// not fit the cuboid (not expected on valid inputs).
RelationWitness relation_witness(const TiltingQuiver& tq, int k_rank, int rho,
                                 const CaseTag& tag, const std::vector<int>& chosen);

// Carries a stable point of the relation locus to its base-constant form by
// an explicit torus element, processing vertices in increasing total order
// with t = 1 at every base vertex. In certify mode the trace carries the
// case tags and relation witnesses justifying each checked equality.
NormalizationResult normalize(const TiltingQuiver& tq, const Point& w, bool certify = false);

}  // namespace qfv
