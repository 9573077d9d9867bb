// Command-line front end: validation, tilting-quiver construction, ideal
// generation, normalization, sampling, the exhaustive oracle and diagram
// export, with JSON in and JSON/DOT/TikZ out.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qfv/io.hpp"
#include "qfv/sampler.hpp"

using namespace qfv;

namespace {

struct Caps {
  long long paths = kDefaultPathCap;
  long long search = kDefaultSearchCap;
};

Caps caps_from_env() {
  Caps caps;
  if (const char* env = std::getenv("QFV_CAP")) {
    long long v = std::stoll(env);
    caps.paths = v;
    caps.search = v;
  }
  return caps;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content << "\n";
  else
    write_text_file(out_path, content + "\n");
}

void emit(const std::string& out_path, const json& j) { emit(out_path, j.dump(2)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric quiver flag variety toolkit"};
  app.require_subcommand(1);

  std::string quiver_path, point_path, out_path, which = "R", format = "dot", field_name = "Q";
  std::string truncate_at;
  bool certify = false;
  int count = 1, zeros = 0;
  std::optional<int> max_path_len;
  std::optional<uint64_t> seed;
  uint32_t oracle_p = 3;
  Caps caps = caps_from_env();

  auto add_quiver_arg = [&](CLI::App* cmd) {
    cmd->add_option("quiver", quiver_path, "quiver JSON file")->required();
    cmd->add_option("-o,--output", out_path, "output file (default: stdout)");
  };

  auto* validate = app.add_subcommand("validate", "validate a quiver file");
  add_quiver_arg(validate);

  auto* tilting = app.add_subcommand("tilting", "construct and export the tilting quiver");
  add_quiver_arg(tilting);
  tilting->add_option("--truncate", truncate_at, "truncate at vertex, e.g. (0,1,1)");

  auto* ideals_cmd = app.add_subcommand("ideals", "export ideal generators");
  add_quiver_arg(ideals_cmd);
  ideals_cmd->add_option("--which", which, "R, B or Q")->check(CLI::IsMember({"R", "B", "Q"}));
  ideals_cmd->add_option("--max-path-len", max_path_len, "bound path length for R");

  auto* normalize_cmd = app.add_subcommand("normalize", "normalize a point to base-constant form");
  add_quiver_arg(normalize_cmd);
  normalize_cmd->add_option("--point", point_path, "point JSON file")->required();
  normalize_cmd->add_flag("--certify", certify, "attach case tags and relation witnesses");

  auto* sample = app.add_subcommand("sample", "sample stable relation-locus points");
  add_quiver_arg(sample);
  sample->add_option("--count", count, "number of points");
  sample->add_option("--seed", seed, "RNG seed")->required();
  sample->add_option("--zeros", zeros, "rays to zero out per point");
  sample->add_option("--field", field_name, "Q or F<p>");

  auto* oracle = app.add_subcommand("oracle", "exhaustive finite-field check");
  add_quiver_arg(oracle);
  oracle->add_option("--field", oracle_p, "prime p")->required();
  oracle->add_option("--cap", caps.search, "ambient point cap");

  auto* diagram = app.add_subcommand("diagram", "emit a DOT or TikZ diagram");
  add_quiver_arg(diagram);
  diagram->add_option("--format", format, "dot or tikz")->check(CLI::IsMember({"dot", "tikz"}));
  diagram->add_option("--truncate", truncate_at, "truncate at vertex, e.g. (0,1,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  TiltingQuiver tq_storage = TiltingQuiver::build(validate_quiver(1, {}));
  TiltingQuiver* tq = nullptr;
  try {
    Quiver q = quiver_from_json(read_json_file(quiver_path));

    if (validate->parsed()) {
      emit(out_path, json{{"valid", true},
                          {"vertices", q.vertex_count()},
                          {"arrows", q.arrows().size()},
                          {"s", rank_sums(q).counts},
                          {"dimension", dimension(q)}});
      return 0;
    }

    tq_storage = TiltingQuiver::build(q);
    tq = &tq_storage;
    if (!truncate_at.empty()) tq_storage = tq_storage.truncate(parse_vertex_tuple(truncate_at));

    if (tilting->parsed()) {
      emit(out_path, tilting_to_json(*tq));
    } else if (ideals_cmd->parsed()) {
      if (which == "R") {
        emit(out_path, ideal_R_to_json(*tq, ideal_R_generators(*tq, max_path_len, caps.paths)));
      } else if (which == "B") {
        emit(out_path, irrelevant_to_json(*tq, irrelevant_ideal(*tq)));
      } else {
        IntMat pi = pi_matrix(*tq);
        LatticeBasis basis = kernel_basis(pi);
        emit(out_path, ideal_Q_to_json(*tq, pi, basis, lattice_binomials(basis)));
      }
    } else if (normalize_cmd->parsed()) {
      Point w = point_from_json(*tq, read_json_file(point_path));
      NormalizationResult res = normalize(*tq, w, certify);
      emit(out_path, normalization_to_json(*tq, res));
    } else if (sample->parsed()) {
      Sampler sampler(*seed);
      FieldDesc f = FieldDesc::parse(field_name);
      json points = json::array();
      for (int i = 0; i < count; ++i)
        points.push_back(point_to_json(*tq, sampler.stable_orbit_point(*tq, f, zeros)));
      emit(out_path, json{{"seed", *seed}, {"points", points}});
    } else if (oracle->parsed()) {
      OracleReport rep = theorem_oracle(q, oracle_p, caps.search, std::nullopt, quiver_path);
      emit(out_path, oracle_report_to_json(rep));
      if (!rep.clean()) return 1;
    } else if (diagram->parsed()) {
      emit(out_path, format == "dot" ? emit_dot(*tq) : emit_tikz(*tq));
    }
  } catch (const std::exception& e) {
    std::cout << error_to_json(tq, e).dump(2) << "\n";
    return 1;
  }
  return 0;
}
