#pragma once

#include <string>

#include <json.hpp>

#include "qfv/bruteforce.hpp"
#include "qfv/normalize.hpp"

namespace qfv {

using nlohmann::json;

// Quiver file: {"vertices": 4, "arrows": [[0,1],[0,1],...]}. Arrow index i
// (0-based) names ray r{i+1} in every output.
json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

// Tilting quiver export; includes the base quiver so the structure
// round-trips bit-exactly.
json tilting_to_json(const TiltingQuiver& tq);
TiltingQuiver tilting_from_json(const json& j);

json point_to_json(const TiltingQuiver& tq, const Point& w);
Point point_from_json(const TiltingQuiver& tq, const json& j);

json torus_to_json(const TiltingQuiver& tq, const TorusElement& t);
TorusElement torus_from_json(const TiltingQuiver& tq, const json& j);

json binomial_to_json(const TiltingQuiver& tq, const Binomial& b);
json binomials_to_json(const TiltingQuiver& tq, const std::vector<Binomial>& bs);

json ideal_R_to_json(const TiltingQuiver& tq, const std::vector<Binomial>& gens);
json irrelevant_to_json(const TiltingQuiver& tq, const std::vector<std::vector<int>>& comps);
json ideal_Q_to_json(const TiltingQuiver& tq, const IntMat& pi, const LatticeBasis& basis,
                     const std::vector<Binomial>& binomials);

json witness_to_json(const TiltingQuiver& tq, const RelationWitness& w);
json case_tag_to_json(const CaseTag& tag);
json normalization_to_json(const TiltingQuiver& tq, const NormalizationResult& res);

json oracle_report_to_json(const OracleReport& rep);

// Diagnostics for the CLI: every domain error serializes to one JSON object.
json error_to_json(const TiltingQuiver* tq, const std::exception& e);

std::string emit_dot(const TiltingQuiver& tq);
std::string emit_tikz(const TiltingQuiver& tq);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qfv
