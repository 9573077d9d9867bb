#include "qfv/normalize.hpp"

#include <algorithm>

namespace qfv {

const char* case_variant_name(CaseVariant v) {
  switch (v) {
    case CaseVariant::BaseChain: return "BaseChain";
    case CaseVariant::NothingToProve: return "NothingToProve";
    case CaseVariant::Case1: return "Case1";
    case CaseVariant::Case2SameAsCase1: return "Case2SameAsCase1";
    case CaseVariant::Case2A: return "Case2A";
    case CaseVariant::Case2B_sBig: return "Case2B_sBig";
    case CaseVariant::Case2B_s2: return "Case2B_s2";
  }
  return "?";
}

const char* witness_shape_name(WitnessShape s) {
  switch (s) {
    case WitnessShape::Rectangle: return "rectangle";
    case WitnessShape::Hexagon: return "hexagon";
    case WitnessShape::Octagon: return "octagon";
  }
  return "?";
}

namespace {

CuboidVertex minus(const CuboidVertex& a, const CuboidVertex& b) {
  CuboidVertex out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

int chosen_at_base(const TiltingQuiver& tq, const std::vector<int>& chosen, int j) {
  int rank = tq.base_vertex_rank(j);
  if (rank < 0 || chosen.at(static_cast<size_t>(rank)) < 0)
    throw std::logic_error("no chosen ray recorded at base vertex e_" + std::to_string(j));
  return chosen[static_cast<size_t>(rank)];
}

// Builds the witness for a list of substituted rays if every shape vertex
// fits the cuboid. Paths: A -r1-> ... -r2-> k and A -r2-> ... -r1-> k with
// the interior rays (r3, r4 when present) shared in the middle.
std::optional<RelationWitness> try_shape(const TiltingQuiver& tq, int k_rank,
                                         WitnessShape shape, std::vector<int> rays,
                                         CuboidVertex* first_missing) {
  const CuboidVertex& k = tq.vertex(k_rank);
  std::vector<CuboidVertex> dus;
  dus.reserve(rays.size());
  for (int r : rays) dus.push_back(tq.du(r));

  // interior rays traversed between the first leg and the last leg
  std::vector<int> mid(rays.begin() + 2, rays.end());
  std::reverse(mid.begin(), mid.end());  // r4 before r3 along the path

  auto walk = [&](int first_ray, int last_ray) {
    // vertex sequence from A to k along first_ray, mid..., last_ray
    std::vector<int> order = {first_ray};
    order.insert(order.end(), mid.begin(), mid.end());
    order.push_back(last_ray);
    std::vector<CuboidVertex> verts(order.size() + 1);
    verts.back() = k;
    for (size_t i = order.size(); i-- > 0;)
      verts[i] = minus(verts[i + 1], tq.du(order[i]));
    return std::pair{order, verts};
  };

  auto [order_a, verts_a] = walk(rays[0], rays[1]);
  auto [order_b, verts_b] = walk(rays[1], rays[0]);

  for (const auto* verts : {&verts_a, &verts_b})
    for (const auto& v : *verts)
      if (!tq.in_cuboid(v)) {
        if (first_missing) *first_missing = v;
        return std::nullopt;
      }

  RelationWitness w;
  w.shape = shape;
  w.rays = std::move(rays);
  auto arrows_of = [&](const std::vector<int>& order, const std::vector<CuboidVertex>& verts) {
    std::vector<int> ids;
    ids.reserve(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
      int id = tq.find_arrow(order[i], tq.full_rank_of(verts[i + 1]));
      if (id < 0) throw std::logic_error("witness arrow vanished from the quiver");
      ids.push_back(id);
    }
    return ids;
  };
  w.path_a = arrows_of(order_a, verts_a);
  w.path_b = arrows_of(order_b, verts_b);
  // cycle: forward along path a, backward along the interior of path b
  for (const auto& v : verts_a) w.cycle.push_back(tq.full_rank_of(v));
  for (size_t i = verts_b.size() - 1; i-- > 1;) w.cycle.push_back(tq.full_rank_of(verts_b[i]));
  w.binomial = make_binomial(Monomial(w.path_a.begin(), w.path_a.end()),
                             Monomial(w.path_b.begin(), w.path_b.end()));
  return w;
}

RelationWitness shape_or_fallback(const TiltingQuiver& tq, int k_rank, int rho,
                                  WitnessShape primary_shape, std::vector<int> primary,
                                  std::optional<std::pair<WitnessShape, std::vector<int>>> fallback) {
  CuboidVertex missing;
  if (auto w = try_shape(tq, k_rank, primary_shape, std::move(primary), &missing)) return *w;
  if (fallback) {
    if (auto w = try_shape(tq, k_rank, fallback->first, std::move(fallback->second), &missing))
      return *w;
  }
  throw WitnessConstructionFailedError(
      k_rank, rho, missing,
      "no relation shape fits below vertex " + vertex_tuple_string(tq.vertex(k_rank)) +
          " for ray r" + std::to_string(rho + 1) + " (vertex " + vertex_tuple_string(missing) +
          " is outside the cuboid)");
}

}  // namespace

CaseTag classify_case(const TiltingQuiver& tq, int k_rank, int rho_k,
                      const std::vector<int>& chosen) {
  const CuboidVertex& k = tq.vertex(k_rank);
  if (k_rank == 0) throw std::invalid_argument("classify_case: vertex e_0 is never processed");

  CaseTag tag;
  int l = tq.length();
  tag.delta = 0;
  for (int i = 1; i <= l; ++i)
    if (k[static_cast<size_t>(i - 1)] != 0) {
      tag.delta = i;
      break;
    }
  tag.beta = tq.base().arrow(rho_k).head;
  tag.alpha = tq.base().arrow(rho_k).tail;
  int rho_e_delta = chosen_at_base(tq, chosen, tag.delta);
  tag.gamma = tq.base().arrow(rho_e_delta).tail;

  bool only_first_axis = true;
  for (int i = 2; i <= l; ++i)
    if (k[static_cast<size_t>(i - 1)] != 0) only_first_axis = false;

  if (only_first_axis) {
    tag.variant = CaseVariant::BaseChain;
    return tag;
  }
  bool is_e_delta = tq.base_vertex_rank(tag.delta) == k_rank;
  if (is_e_delta) {
    tag.variant = CaseVariant::NothingToProve;
    return tag;
  }
  if (tag.delta != tag.beta) {
    tag.variant = CaseVariant::Case1;
    if (tag.gamma == tag.alpha && tag.alpha != 0 && tq.ranks().s(tag.gamma) == 2)
      tag.epsilon = tq.base().arrow(chosen_at_base(tq, chosen, tag.gamma)).tail;
    return tag;
  }
  if (k[static_cast<size_t>(tag.delta - 1)] > 1) {
    tag.variant = CaseVariant::Case2SameAsCase1;
    if (tag.gamma == tag.alpha && tag.alpha != 0 && tq.ranks().s(tag.gamma) == 2)
      tag.epsilon = tq.base().arrow(chosen_at_base(tq, chosen, tag.gamma)).tail;
    return tag;
  }
  int xi = 0;
  for (int i = tag.delta + 1; i <= l; ++i)
    if (k[static_cast<size_t>(i - 1)] != 0) {
      xi = i;
      break;
    }
  tag.xi = xi;
  int rho_e_xi = chosen_at_base(tq, chosen, xi);
  tag.eta = tq.base().arrow(rho_e_xi).tail;
  if (*tag.eta != tag.delta) {
    tag.variant = CaseVariant::Case2A;
    if (*tag.eta == tag.alpha && tag.alpha != 0 && tq.ranks().s(*tag.eta) == 2)
      tag.epsilon = tq.base().arrow(chosen_at_base(tq, chosen, *tag.eta)).tail;
    return tag;
  }
  if (tq.ranks().s(tag.delta) > 2) {
    tag.variant = CaseVariant::Case2B_sBig;
    return tag;
  }
  tag.variant = CaseVariant::Case2B_s2;
  if (tag.gamma == tag.alpha && tag.alpha != 0 && rho_k != rho_e_delta)
    tag.epsilon = tq.base().arrow(chosen_at_base(tq, chosen, tag.gamma)).tail;
  return tag;
}

RelationWitness relation_witness(const TiltingQuiver& tq, int k_rank, int rho,
                                 const CaseTag& tag, const std::vector<int>& chosen) {
  int rho_k = chosen.at(static_cast<size_t>(k_rank));
  if (rho == rho_k)
    throw std::invalid_argument("relation_witness: the chosen ray needs no witness");
  const int mu = tq.base().arrow(rho).head;

  using Rect = std::vector<int>;
  auto rect = [&](int r1, int r2, std::optional<std::pair<WitnessShape, Rect>> fb) {
    return shape_or_fallback(tq, k_rank, rho, WitnessShape::Rectangle, {r1, r2}, std::move(fb));
  };
  auto hex_fb = [&](int r1, int r2, int j) {
    return std::pair{WitnessShape::Hexagon, Rect{r1, r2, chosen_at_base(tq, chosen, j)}};
  };

  switch (tag.variant) {
    case CaseVariant::BaseChain:
      return rect(rho_k, rho, std::nullopt);

    case CaseVariant::Case1:
    case CaseVariant::Case2SameAsCase1: {
      int ref = chosen_at_base(tq, chosen, tag.delta);
      if (rho == ref)
        return rect(rho_k, ref, tag.gamma >= 1 ? std::optional(hex_fb(rho_k, ref, tag.gamma)) : std::nullopt);
      if (mu != tag.beta)
        return rect(rho, rho_k, tag.alpha >= 1 ? std::optional(hex_fb(rho, rho_k, tag.alpha)) : std::nullopt);
      return rect(ref, rho, tag.gamma >= 1 ? std::optional(hex_fb(ref, rho, tag.gamma)) : std::nullopt);
    }

    case CaseVariant::Case2A:
    case CaseVariant::Case2B_sBig: {
      int ref = chosen_at_base(tq, chosen, *tag.xi);
      if (rho == ref)
        return rect(rho_k, ref, *tag.eta >= 1 ? std::optional(hex_fb(rho_k, ref, *tag.eta)) : std::nullopt);
      if (mu != tag.beta)
        return rect(rho, rho_k, tag.alpha >= 1 ? std::optional(hex_fb(rho, rho_k, tag.alpha)) : std::nullopt);
      return rect(ref, rho, *tag.eta >= 1 ? std::optional(hex_fb(ref, rho, *tag.eta)) : std::nullopt);
    }

    case CaseVariant::Case2B_s2: {
      int ref_xi = chosen_at_base(tq, chosen, *tag.xi);
      if (mu > tag.delta)
        return rect(rho_k, rho, tag.alpha >= 1 ? std::optional(hex_fb(rho_k, rho, tag.alpha)) : std::nullopt);
      // mu == delta: length-3 relation through e_xi, widening to length 4
      // when the two rays share a nonzero tail.
      std::optional<std::pair<WitnessShape, Rect>> fb;
      if (tag.alpha >= 1)
        fb = std::pair{WitnessShape::Octagon,
                       Rect{rho_k, rho, ref_xi, chosen_at_base(tq, chosen, tag.alpha)}};
      return shape_or_fallback(tq, k_rank, rho, WitnessShape::Hexagon, {rho_k, rho, ref_xi},
                               std::move(fb));
    }

    case CaseVariant::NothingToProve:
      throw std::invalid_argument("relation_witness: nothing to prove at a base vertex");
  }
  throw std::logic_error("relation_witness: unhandled variant");
}

NormalizationResult normalize(const TiltingQuiver& tq, const Point& w, bool certify) {
  if (w.size() != tq.num_arrows())
    throw std::invalid_argument("normalize: point size does not match quiver");
  if (is_unstable(tq, w)) throw UnstableInputError();

  const FieldDesc f = w.field();
  Point cur = w;
  TorusElement torus(f, tq.num_vertices());
  std::vector<int> chosen(static_cast<size_t>(tq.num_vertices()), -1);
  std::vector<VertexTrace> trace;

  auto reference = [&](int ray) -> const FieldValue& {
    // base arrows join base vertices, where t stays 1, so their current
    // values are the original ones
    return cur.value(tq.base_arrow_id(ray));
  };

  for (int v = 1; v < tq.num_vertices(); ++v) {
    const auto& in = tq.arrows_into(v);
    int sel = -1, first_nonzero = -1;
    for (int id : in) {
      if (cur.value(id).is_zero()) continue;
      if (first_nonzero < 0) first_nonzero = id;
      if (sel < 0 && !reference(tq.arrow(id).ray).is_zero()) sel = id;
    }
    if (first_nonzero < 0) throw UnstableInputError();  // unreachable after the pre-check

    VertexTrace tr;
    tr.vertex = v;
    tr.t = FieldValue::one(f);

    if (tq.is_base_vertex(v)) {
      // incoming arrows here are the base arrows themselves; they are their
      // own references and the scaling stays 1
      chosen[static_cast<size_t>(v)] = tq.arrow(first_nonzero).ray;
      tr.rho = chosen[static_cast<size_t>(v)];
      trace.push_back(std::move(tr));
      continue;
    }

    if (sel < 0) {
      int r = tq.arrow(first_nonzero).ray;
      throw ZeroReferenceError(
          v, r,
          "every nonzero arrow into " + vertex_tuple_string(tq.vertex(v)) +
              " has zero base reference (first: r" + std::to_string(r + 1) + ")");
    }
    int rho_k = tq.arrow(sel).ray;
    chosen[static_cast<size_t>(v)] = rho_k;
    FieldValue t_k = reference(rho_k) / cur.value(sel);
    for (int id : in) cur.set(id, t_k * cur.value(id));
    for (int id : tq.arrows_out_of(v)) cur.set(id, cur.value(id) / t_k);
    torus.set(v, t_k);

    std::optional<CaseTag> tag;
    if (certify) tag = classify_case(tq, v, rho_k, chosen);

    for (int id : in) {
      if (id == sel) continue;
      int ray = tq.arrow(id).ray;
      const FieldValue& expected = reference(ray);
      if (cur.value(id) == expected) continue;
      std::optional<Binomial> violated;
      if (tag) {
        try {
          violated = relation_witness(tq, v, ray, *tag, chosen).binomial;
        } catch (const WitnessConstructionFailedError&) {
        }
      }
      throw InconsistentAtVertexError(
          v, ray, expected, cur.value(id), std::move(violated),
          "arrow r" + std::to_string(ray + 1) + " into " + vertex_tuple_string(tq.vertex(v)) +
              " normalizes to " + cur.value(id).to_string() + ", base reference is " +
              expected.to_string());
    }

    tr.rho = rho_k;
    tr.t = t_k;
    tr.tag = tag;
    if (certify) {
      for (int id : in) {
        if (id == sel) continue;
        tr.witnesses.push_back(relation_witness(tq, v, tq.arrow(id).ray, *tag, chosen));
      }
    }
    trace.push_back(std::move(tr));
  }

  return NormalizationResult{std::move(torus), std::move(cur), std::move(trace)};
}

}  // namespace qfv
