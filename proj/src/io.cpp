#include "qfv/io.hpp"

#include <fstream>
#include <sstream>

namespace qfv {

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.tail, a.head});
  return json{{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  return validate_quiver(j.at("vertices").get<int>(), arrows);
}

json tilting_to_json(const TiltingQuiver& tq) {
  json vertices = json::array();
  for (int v = 0; v < tq.num_vertices(); ++v) vertices.push_back(tq.vertex(v));
  json arrows = json::array();
  for (int id = 0; id < tq.num_arrows(); ++id) {
    const auto& a = tq.arrow(id);
    arrows.push_back({{"ray", a.ray + 1}, {"head", tq.vertex(a.head)}});
  }
  json s = json::array();
  for (int c : tq.ranks().counts) s.push_back(c);
  return json{{"base", quiver_to_json(tq.base())},
              {"s", s},
              {"vertices", vertices},
              {"arrows", arrows}};
}

TiltingQuiver tilting_from_json(const json& j) {
  TiltingQuiver tq = TiltingQuiver::build(quiver_from_json(j.at("base")));
  if (j.contains("vertices") && j.at("vertices").size() != static_cast<size_t>(tq.num_vertices())) {
    // a truncated export: the last listed vertex is the bound
    CuboidVertex bound = j.at("vertices").back().get<CuboidVertex>();
    tq = tq.truncate(bound);
  }
  // verify the listed structure against the rebuilt one
  json expect = tilting_to_json(tq);
  if (j.contains("vertices") && j.at("vertices") != expect.at("vertices"))
    throw std::invalid_argument("tilting import: vertex list does not match the base quiver");
  if (j.contains("arrows") && j.at("arrows") != expect.at("arrows"))
    throw std::invalid_argument("tilting import: arrow list does not match the base quiver");
  return tq;
}

json point_to_json(const TiltingQuiver& tq, const Point& w) {
  json values = json::object();
  for (int id = 0; id < tq.num_arrows(); ++id)
    values[tq.arrow_key(id)] = w.value(id).to_string();
  return json{{"field", w.field().name()}, {"values", values}};
}

Point point_from_json(const TiltingQuiver& tq, const json& j) {
  FieldDesc f = FieldDesc::parse(j.at("field").get<std::string>());
  Point w(f, tq.num_arrows());
  const json& values = j.at("values");
  size_t seen = 0;
  for (auto it = values.begin(); it != values.end(); ++it) {
    int id = tq.parse_arrow_key(it.key());
    if (id < 0) throw std::invalid_argument("point import: unknown arrow key '" + it.key() + "'");
    w.set(id, FieldValue::parse(f, it.value().get<std::string>()));
    ++seen;
  }
  if (seen != static_cast<size_t>(tq.num_arrows()))
    throw std::invalid_argument("point import: expected " + std::to_string(tq.num_arrows()) +
                                " arrow values, got " + std::to_string(seen));
  return w;
}

json torus_to_json(const TiltingQuiver& tq, const TorusElement& t) {
  json values = json::object();
  for (int v = 0; v < tq.num_vertices(); ++v)
    values[vertex_tuple_string(tq.vertex(v))] = t.value(v).to_string();
  return json{{"field", t.field().name()}, {"values", values}};
}

TorusElement torus_from_json(const TiltingQuiver& tq, const json& j) {
  FieldDesc f = FieldDesc::parse(j.at("field").get<std::string>());
  TorusElement t(f, tq.num_vertices());
  const json& values = j.at("values");
  for (auto it = values.begin(); it != values.end(); ++it) {
    CuboidVertex m = parse_vertex_tuple(it.key());
    if (!tq.contains(m))
      throw std::invalid_argument("torus import: unknown vertex '" + it.key() + "'");
    int rank = tq.full_rank_of(m);
    FieldValue v = FieldValue::parse(f, it.value().get<std::string>());
    if (rank == 0) {
      if (!v.is_one()) throw std::invalid_argument("torus import: t(e_0) must be 1");
      continue;
    }
    t.set(rank, std::move(v));
  }
  return t;
}

json binomial_to_json(const TiltingQuiver& tq, const Binomial& b) {
  auto side = [&](const Monomial& m) {
    json out = json::array();
    for (int id : m) out.push_back(tq.arrow_key(id));
    return out;
  };
  return json{{"lhs", side(b.lhs)}, {"rhs", side(b.rhs)}};
}

json binomials_to_json(const TiltingQuiver& tq, const std::vector<Binomial>& bs) {
  json out = json::array();
  for (const auto& b : bs) out.push_back(binomial_to_json(tq, b));
  return out;
}

json ideal_R_to_json(const TiltingQuiver& tq, const std::vector<Binomial>& gens) {
  return json{{"ideal", "R"}, {"count", gens.size()}, {"generators", binomials_to_json(tq, gens)}};
}

json irrelevant_to_json(const TiltingQuiver& tq, const std::vector<std::vector<int>>& comps) {
  json components = json::array();
  for (size_t i = 0; i < comps.size(); ++i) {
    json arrows = json::array();
    for (int id : comps[i]) arrows.push_back(tq.arrow_key(id));
    components.push_back(
        {{"vertex", tq.vertex(static_cast<int>(i) + 1)}, {"arrows", arrows}});
  }
  return json{{"ideal", "B"}, {"components", components}};
}

json ideal_Q_to_json(const TiltingQuiver& tq, const IntMat& pi, const LatticeBasis& basis,
                     const std::vector<Binomial>& binomials) {
  json mat = json::array();
  for (int r = 0; r < pi.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < pi.cols(); ++c) row.push_back(pi.at(r, c).to_ll());
    mat.push_back(row);
  }
  json kern = json::array();
  for (const auto& u : basis.vectors) {
    json row = json::array();
    for (const auto& x : u) row.push_back(x.to_ll());
    kern.push_back(row);
  }
  return json{{"ideal", "Q"},
              {"pi_rows", pi.rows()},
              {"pi_cols", pi.cols()},
              {"matrix", mat},
              {"kernel_rank", basis.rank()},
              {"kernel_basis", kern},
              {"generators", binomials_to_json(tq, binomials)}};
}

json case_tag_to_json(const CaseTag& tag) {
  json out{{"variant", case_variant_name(tag.variant)},
           {"delta", tag.delta},
           {"beta", tag.beta},
           {"alpha", tag.alpha},
           {"gamma", tag.gamma}};
  if (tag.xi) out["xi"] = *tag.xi;
  if (tag.eta) out["eta"] = *tag.eta;
  if (tag.epsilon) out["epsilon"] = *tag.epsilon;
  return out;
}

json witness_to_json(const TiltingQuiver& tq, const RelationWitness& w) {
  json rays = json::array();
  for (int r : w.rays) rays.push_back(r + 1);
  json cycle = json::array();
  for (int v : w.cycle) cycle.push_back(tq.vertex(v));
  return json{{"shape", witness_shape_name(w.shape)},
              {"rays", rays},
              {"cycle", cycle},
              {"binomial", binomial_to_json(tq, w.binomial)}};
}

json normalization_to_json(const TiltingQuiver& tq, const NormalizationResult& res) {
  json trace = json::array();
  for (const auto& tr : res.trace) {
    json entry{{"vertex", tq.vertex(tr.vertex)},
               {"rho_k", tr.rho + 1},
               {"t_k", tr.t.to_string()}};
    if (tr.tag) entry["case"] = case_tag_to_json(*tr.tag);
    if (!tr.witnesses.empty()) {
      json ws = json::array();
      for (const auto& w : tr.witnesses) ws.push_back(witness_to_json(tq, w));
      entry["witnesses"] = ws;
    }
    trace.push_back(entry);
  }
  return json{{"torus", torus_to_json(tq, res.torus)},
              {"normalized", point_to_json(tq, res.normalized)},
              {"trace", trace}};
}

json oracle_report_to_json(const OracleReport& rep) {
  json out{{"quiver", rep.quiver_id},
           {"field", "F" + std::to_string(rep.p)},
           {"ambient_count", rep.ambient_count},
           {"relation_locus_count", rep.relation_locus_count},
           {"unstable_relation_count", rep.unstable_relation_count},
           {"stable_relation_count", rep.stable_relation_count},
           {"normalize_successes", rep.normalize_successes},
           {"normalize_failures", rep.normalize_failures},
           {"transport_violations", rep.transport_violations},
           {"base_constancy_violations", rep.base_constancy_violations},
           {"lattice_violations", rep.lattice_violations},
           {"stability_equivalence_violations", rep.stability_equivalence_violations}};
  if (rep.first_failure_index) out["first_failure_index"] = *rep.first_failure_index;
  return out;
}

json error_to_json(const TiltingQuiver* tq, const std::exception& e) {
  json out{{"message", e.what()}};
  if (auto* qe = dynamic_cast<const QuiverError*>(&e)) {
    out["error"] = QuiverError::kind_name(qe->kind);
    if (qe->vertex >= 0) out["vertex"] = qe->vertex;
    if (!qe->cycle_witness.empty()) out["cycle"] = qe->cycle_witness;
  } else if (dynamic_cast<const UnstableInputError*>(&e)) {
    out["error"] = "UnstableInput";
  } else if (auto* ze = dynamic_cast<const ZeroReferenceError*>(&e)) {
    out["error"] = "ZeroReference";
    if (tq) out["vertex"] = tq->vertex(ze->vertex);
    out["ray"] = ze->ray + 1;
  } else if (auto* ie = dynamic_cast<const InconsistentAtVertexError*>(&e)) {
    out["error"] = "InconsistentAtVertex";
    if (tq) out["vertex"] = tq->vertex(ie->vertex);
    out["ray"] = ie->ray + 1;
    out["expected"] = ie->expected.to_string();
    out["found"] = ie->found.to_string();
    if (ie->violated && tq) out["binomial"] = binomial_to_json(*tq, *ie->violated);
  } else if (auto* we = dynamic_cast<const WitnessConstructionFailedError*>(&e)) {
    out["error"] = "WitnessConstructionFailed";
    if (tq) out["vertex"] = tq->vertex(we->vertex);
    out["ray"] = we->ray + 1;
    out["missing"] = we->missing;
  } else if (dynamic_cast<const PathExplosion*>(&e)) {
    out["error"] = "PathExplosion";
  } else if (dynamic_cast<const SearchTooLarge*>(&e)) {
    out["error"] = "SearchTooLarge";
  } else if (dynamic_cast<const ZeroScaling*>(&e)) {
    out["error"] = "ZeroScaling";
  } else {
    out["error"] = "DomainError";
  }
  return out;
}

namespace {

const char* kDotPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
                             "#e6ab02", "#a6761d", "#666666", "#1f78b4", "#b2df8a"};
const char* kTikzPalette[] = {"green!60!black", "red",    "blue",   "magenta", "cyan",
                              "orange",         "violet", "teal",  "olive",   "brown"};

// x = coordinate sum (the grading level), y = position within the level
std::vector<std::pair<int, int>> grid_layout(const TiltingQuiver& tq) {
  std::vector<std::pair<int, int>> pos(static_cast<size_t>(tq.num_vertices()));
  std::vector<int> level_fill;
  for (int v = 0; v < tq.num_vertices(); ++v) {
    int level = 0;
    for (int c : tq.vertex(v)) level += c;
    if (level >= static_cast<int>(level_fill.size())) level_fill.resize(level + 1, 0);
    pos[static_cast<size_t>(v)] = {level, level_fill[static_cast<size_t>(level)]++};
  }
  return pos;
}

}  // namespace

std::string emit_dot(const TiltingQuiver& tq) {
  std::ostringstream os;
  os << "digraph tilting_quiver {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  for (int v = 0; v < tq.num_vertices(); ++v) {
    std::string name = vertex_tuple_string(tq.vertex(v));
    os << "  \"" << name << "\";\n";
  }
  for (int id = 0; id < tq.num_arrows(); ++id) {
    const auto& a = tq.arrow(id);
    os << "  \"" << vertex_tuple_string(tq.vertex(a.tail)) << "\" -> \""
       << vertex_tuple_string(tq.vertex(a.head)) << "\" [color=\""
       << kDotPalette[a.ray % 10] << "\", label=\"r" << a.ray + 1 << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_tikz(const TiltingQuiver& tq) {
  auto pos = grid_layout(tq);
  std::ostringstream os;
  os << "\\begin{tikzpicture}[>=latex, xscale=2.2, yscale=1.4]\n";
  for (int v = 0; v < tq.num_vertices(); ++v) {
    os << "  \\node (v" << v << ") at (" << pos[static_cast<size_t>(v)].first << ","
       << pos[static_cast<size_t>(v)].second << ") {$" << vertex_tuple_string(tq.vertex(v))
       << "$};\n";
  }
  for (int id = 0; id < tq.num_arrows(); ++id) {
    const auto& a = tq.arrow(id);
    os << "  \\draw[->, " << kTikzPalette[a.ray % 10] << "] (v" << a.tail << ") -- (v" << a.head
       << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace qfv
