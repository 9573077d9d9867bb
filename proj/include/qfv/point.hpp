#pragma once

#include <optional>
#include <vector>

#include "qfv/field.hpp"
#include "qfv/ideals.hpp"
#include "qfv/tilting.hpp"

namespace qfv {

// A point of the representation space: one field value per arrow of the
// (possibly truncated) tilting quiver, in arrow-id order. Total by
// construction; a single field throughout.
class Point {
 public:
  Point(FieldDesc f, int num_arrows) : field_(f), values_(static_cast<size_t>(num_arrows), FieldValue::zero(f)) {}
  Point(FieldDesc f, std::vector<FieldValue> values);

  FieldDesc field() const { return field_; }
  int size() const { return static_cast<int>(values_.size()); }
  const FieldValue& value(int arrow_id) const { return values_.at(static_cast<size_t>(arrow_id)); }
  void set(int arrow_id, FieldValue v);
  const std::vector<FieldValue>& values() const { return values_; }

  // Coordinate projection onto a truncated quiver: keep the id-stable prefix.
  Point restrict_to(int num_arrows) const;

  bool operator==(const Point& o) const { return field_ == o.field_ && values_ == o.values_; }

 private:
  FieldDesc field_;
  std::vector<FieldValue> values_;
};

// A vertex-indexed scaling with every value nonzero and t(e_0) = 1.
class TorusElement {
 public:
  TorusElement(FieldDesc f, int num_vertices);  // identity
  FieldDesc field() const { return field_; }
  int size() const { return static_cast<int>(values_.size()); }
  const FieldValue& value(int vertex_rank) const { return values_.at(static_cast<size_t>(vertex_rank)); }
  void set(int vertex_rank, FieldValue v);  // throws ZeroScaling on zero, gauge violation at rank 0

  bool operator==(const TorusElement& o) const { return field_ == o.field_ && values_ == o.values_; }

 private:
  FieldDesc field_;
  std::vector<FieldValue> values_;
};

struct ZeroScaling : std::domain_error {
  using std::domain_error::domain_error;
};

// The point whose every translate carries its base arrow's value.
Point v_point(const TiltingQuiver& tq, const Point& w);

// Conjugation action: value at arrow a becomes t(head) * w(a) / t(tail).
Point torus_act(const TiltingQuiver& tq, const TorusElement& t, const Point& w);

// Composition of scalings (pointwise product).
TorusElement torus_compose(const TorusElement& a, const TorusElement& b);

FieldValue evaluate_monomial(const Monomial& m, const Point& w);
FieldValue evaluate_binomial(const Binomial& b, const Point& w);

// Index of the first generator not vanishing at w, or nullopt if all vanish.
std::optional<size_t> evaluate_generators(const Point& w, const std::vector<Binomial>& gens);

// True when some vertex other than e_0 has every incoming arrow value zero.
bool is_unstable(const TiltingQuiver& tq, const Point& w);

// True when every vertex is reachable from e_0 along arrows with nonzero value.
bool is_zero_generated(const TiltingQuiver& tq, const Point& w);

}  // namespace qfv
