#include "qfv/point.hpp"

namespace qfv {

Point::Point(FieldDesc f, std::vector<FieldValue> values) : field_(f), values_(std::move(values)) {
  for (const auto& v : values_)
    if (!(v.field() == field_)) throw std::domain_error("Point: mixed fields");
}

void Point::set(int arrow_id, FieldValue v) {
  if (!(v.field() == field_)) throw std::domain_error("Point: mixed fields");
  values_.at(static_cast<size_t>(arrow_id)) = std::move(v);
}

Point Point::restrict_to(int num_arrows) const {
  if (num_arrows > size()) throw std::out_of_range("Point: cannot restrict upward");
  Point out(field_, {values_.begin(), values_.begin() + num_arrows});
  return out;
}

TorusElement::TorusElement(FieldDesc f, int num_vertices)
    : field_(f), values_(static_cast<size_t>(num_vertices), FieldValue::one(f)) {}

void TorusElement::set(int vertex_rank, FieldValue v) {
  if (!(v.field() == field_)) throw std::domain_error("TorusElement: mixed fields");
  if (v.is_zero()) throw ZeroScaling("torus element value must be nonzero");
  if (vertex_rank == 0 && !v.is_one())
    throw std::domain_error("TorusElement: gauge fixes t(e_0) = 1");
  values_.at(static_cast<size_t>(vertex_rank)) = std::move(v);
}

Point v_point(const TiltingQuiver& tq, const Point& w) {
  Point out(w.field(), w.size());
  for (int id = 0; id < tq.num_arrows(); ++id) {
    int base = tq.base_arrow_id(tq.arrow(id).ray);
    out.set(id, w.value(base));
  }
  return out;
}

Point torus_act(const TiltingQuiver& tq, const TorusElement& t, const Point& w) {
  if (!(t.field() == w.field())) throw std::domain_error("torus_act: mixed fields");
  Point out(w.field(), w.size());
  for (int id = 0; id < tq.num_arrows(); ++id) {
    const TiltingArrow& a = tq.arrow(id);
    out.set(id, t.value(a.head) * w.value(id) / t.value(a.tail));
  }
  return out;
}

TorusElement torus_compose(const TorusElement& a, const TorusElement& b) {
  if (!(a.field() == b.field()) || a.size() != b.size())
    throw std::domain_error("torus_compose: mismatched elements");
  TorusElement out(a.field(), a.size());
  for (int v = 1; v < a.size(); ++v) out.set(v, a.value(v) * b.value(v));
  return out;
}

FieldValue evaluate_monomial(const Monomial& m, const Point& w) {
  FieldValue acc = FieldValue::one(w.field());
  for (int id : m) acc *= w.value(id);
  return acc;
}

FieldValue evaluate_binomial(const Binomial& b, const Point& w) {
  return evaluate_monomial(b.lhs, w) - evaluate_monomial(b.rhs, w);
}

std::optional<size_t> evaluate_generators(const Point& w, const std::vector<Binomial>& gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    if (!evaluate_binomial(gens[i], w).is_zero()) return i;
  return std::nullopt;
}

bool is_unstable(const TiltingQuiver& tq, const Point& w) {
  for (int v = 1; v < tq.num_vertices(); ++v) {
    bool any = false;
    for (int id : tq.arrows_into(v))
      if (!w.value(id).is_zero()) {
        any = true;
        break;
      }
    if (!any) return true;
  }
  return false;
}

bool is_zero_generated(const TiltingQuiver& tq, const Point& w) {
  std::vector<char> reached(static_cast<size_t>(tq.num_vertices()), 0);
  reached[0] = 1;
  // arrows only go up the total order, so one forward sweep settles it
  for (int v = 0; v < tq.num_vertices(); ++v) {
    if (v > 0) {
      for (int id : tq.arrows_into(v))
        if (reached[static_cast<size_t>(tq.arrow(id).tail)] && !w.value(id).is_zero()) {
          reached[static_cast<size_t>(v)] = 1;
          break;
        }
      if (!reached[static_cast<size_t>(v)]) return false;
    }
  }
  return true;
}

}  // namespace qfv
