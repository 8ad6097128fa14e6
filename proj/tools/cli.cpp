#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "prescurv/curvature_field.hpp"
#include "prescurv/errors.hpp"
#include "prescurv/expression.hpp"
#include "prescurv/functional.hpp"
#include "prescurv/generator.hpp"
#include "prescurv/mesh.hpp"
#include "prescurv/obj_io.hpp"
#include "prescurv/report_json.hpp"

namespace prescurv::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Any failure that ends a command; `kind` is a stable machine-readable tag.
class Failure : public std::runtime_error {
 public:
  Failure(int code, std::string kind, const std::string& message)
      : std::runtime_error(message), code(code), kind(std::move(kind)) {}
  int code;
  std::string kind;
};

int report_failure(const Failure& f, Streams io) {
  const json j{{"status", "error"}, {"error", f.kind}, {"exit_code", f.code}, {"message", f.what()}};
  io.out << j.dump(2) << "\n";
  io.err << "error: " << f.what() << "\n";
  return f.code;
}

template <class Body>
int guarded(Streams io, Body&& body) {
  try {
    return body();
  } catch (const Failure& f) {
    return report_failure(f, io);
  }
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kIoFailure, "io", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Failure(kIoFailure, "io", "cannot read " + path.string());
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure(kIoFailure, "io", "cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Failure(kIoFailure, "io", "cannot write " + path.string());
}

void make_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw Failure(kIoFailure, "io", "cannot create directory " + dir.string() + (ec ? ": " + ec.message() : ""));
}

TriangleMesh load_mesh(const fs::path& path) {
  try {
    return load_obj(path);
  } catch (const IoError& e) {
    throw Failure(kIoFailure, "io", e.what());
  } catch (const ParseError& e) {
    throw Failure(kInvalidMesh, "mesh_parse", path.string() + ": " + e.what());
  } catch (const TopologyError& e) {
    throw Failure(kInvalidMesh, "topology", path.string() + ": " + e.what());
  } catch (const GeometryError& e) {
    throw Failure(kInvalidMesh, "geometry", path.string() + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw Failure(kInvalidMesh, "mesh", path.string() + ": " + e.what());
  }
}

BackgroundGeometry geometry_of(const TriangleMesh& mesh) {
  try {
    return build_geometry(mesh);
  } catch (const GeometryError& e) {
    throw Failure(kInvalidMesh, "geometry", e.what());
  }
}

int genus_of(const TriangleMesh& mesh) {
  try {
    return genus(mesh);
  } catch (const TopologyError& e) {
    throw Failure(kInvalidMesh, "topology", e.what());
  }
}

void genus_guard(int g, bool allow_any_genus, Streams io) {
  if (g > 1) return;
  const std::string msg =
      "mesh has genus " + std::to_string(g) + "; the existence and uniqueness theorem requires genus g > 1";
  if (!allow_any_genus) throw Failure(kGenusGuard, "genus_guard", msg + " (pass --allow-any-genus to try anyway)");
  io.err << "warning: " << msg << "; continuing because --allow-any-genus is set\n";
}

json mesh_summary(const TriangleMesh& mesh, int g) {
  return json{{"V", mesh.num_vertices()},
              {"E", mesh.num_edges()},
              {"F", mesh.num_faces()},
              {"chi", euler_characteristic(mesh)},
              {"genus", g}};
}

// ---- config parsing -------------------------------------------------------

std::string join_path(const std::string& where, const std::string& key) { return where + "/" + key; }

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || item.key() == a;
    if (!known) throw ConfigError(join_path(where, item.key()) + ": unknown key");
  }
}

double number_of(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + ": expected a number");
  return v.get<double>();
}

int integer_of(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw ConfigError(where + ": integer out of range");
  return static_cast<int>(x);
}

std::string string_of(const json& v, const std::string& where) {
  if (!v.is_string()) throw ConfigError(where + ": expected a string");
  return v.get<std::string>();
}

fs::path path_of(const json& v, const std::string& where, const fs::path& base) {
  fs::path p = string_of(v, where);
  if (p.empty()) throw ConfigError(where + ": empty path");
  return p.is_absolute() ? p : base / p;
}

// Exactly one of `keys` must be present in `obj`; returns it.
std::string one_of(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  check_keys(obj, keys, where);
  if (obj.size() != 1) {
    std::string names;
    for (const char* k : keys) names += std::string(names.empty() ? "" : ", ") + k;
    throw ConfigError(where + ": expected exactly one of {" + names + "}");
  }
  return obj.begin().key();
}

void parse_solver(const json& s, const fs::path& base, RunConfig& config) {
  const std::string where = "/solver";
  check_keys(s,
             {"method", "residual_tol", "max_iterations", "armijo_c", "backtrack_factor", "min_step", "initial_sigma",
              "damping", "linear_solver", "descent_metric", "linear_tol"},
             where);
  SolverConfig& c = config.solver;
  if (s.contains("method")) {
    const std::string m = string_of(s["method"], where + "/method");
    if (m == "newton") c.method = Method::Newton;
    else if (m == "descent") c.method = Method::Descent;
    else throw ConfigError(where + "/method: expected \"newton\" or \"descent\", got \"" + m + "\"");
  }
  if (s.contains("residual_tol")) c.residual_tol = number_of(s["residual_tol"], where + "/residual_tol");
  if (s.contains("max_iterations")) c.max_iterations = integer_of(s["max_iterations"], where + "/max_iterations");
  if (s.contains("armijo_c")) c.armijo_c = number_of(s["armijo_c"], where + "/armijo_c");
  if (s.contains("backtrack_factor")) c.backtrack_factor = number_of(s["backtrack_factor"], where + "/backtrack_factor");
  if (s.contains("min_step")) c.min_step = number_of(s["min_step"], where + "/min_step");
  if (s.contains("damping")) c.damping = number_of(s["damping"], where + "/damping");
  if (s.contains("linear_tol")) c.linear_tol = number_of(s["linear_tol"], where + "/linear_tol");
  if (s.contains("linear_solver")) {
    const std::string v = string_of(s["linear_solver"], where + "/linear_solver");
    if (v == "auto") c.linear_solver = LinearSolver::Auto;
    else if (v == "direct") c.linear_solver = LinearSolver::Direct;
    else if (v == "cg") c.linear_solver = LinearSolver::ConjugateGradient;
    else throw ConfigError(where + "/linear_solver: expected \"auto\", \"direct\" or \"cg\"");
  }
  if (s.contains("descent_metric")) {
    const std::string v = string_of(s["descent_metric"], where + "/descent_metric");
    if (v == "sobolev") c.descent_metric = DescentMetric::Sobolev;
    else if (v == "euclidean") c.descent_metric = DescentMetric::Euclidean;
    else throw ConfigError(where + "/descent_metric: expected \"sobolev\" or \"euclidean\"");
  }
  if (s.contains("initial_sigma")) {
    const json& init = s["initial_sigma"];
    const std::string w = where + "/initial_sigma";
    if (init.is_string()) {
      const std::string v = init.get<std::string>();
      if (v == "zeros") c.initial = InitialSigma::Zeros;
      else if (v == "gauss_bonnet_constant") c.initial = InitialSigma::GaussBonnetConstant;
      else throw ConfigError(w + ": expected \"zeros\", \"gauss_bonnet_constant\", {\"values\": [...]} or {\"csv\": path}");
    } else {
      const std::string key = one_of(init, {"values", "csv"}, w);
      c.initial = InitialSigma::User;
      if (key == "csv") {
        config.initial_sigma_csv = path_of(init["csv"], w + "/csv", base);
      } else {
        const json& arr = init["values"];
        if (!arr.is_array()) throw ConfigError(w + "/values: expected an array");
        c.initial_values.resize(static_cast<Eigen::Index>(arr.size()));
        for (std::size_t i = 0; i < arr.size(); ++i)
          c.initial_values[static_cast<Eigen::Index>(i)] = number_of(arr[i], w + "/values/" + std::to_string(i));
      }
    }
  }
  try {
    c.validate();
  } catch (const PreconditionError& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

// ---- solve pipeline -------------------------------------------------------

struct ResolvedTarget {
  TargetCurvature target;
  json description;
  std::optional<double> constant;
};

ResolvedTarget resolve_target(const RunConfig::Target& requested, const TriangleMesh& mesh, const BackgroundGeometry& geom) {
  const int n = geom.num_vertices;
  auto constant_target = [&](double value, json description) {
    if (!(value < 0.0)) {
      throw Failure(kNegativity, "negativity",
                    "hypothesis K<0 violated: constant target " + format_double(value) + " is not negative at any of " +
                        std::to_string(n) + " vertices");
    }
    return ResolvedTarget{constant_curvature(value, n), std::move(description), value};
  };
  try {
    switch (requested.kind) {
      case RunConfig::Target::Kind::Constant:
        return constant_target(requested.value, json{{"kind", "constant"}, {"value", requested.value}});
      case RunConfig::Target::Kind::Expression: {
        const Expression expr = Expression::parse(requested.expression);
        json description{{"kind", "expression"}, {"text", requested.expression}, {"canonical", expr.to_string()}};
        if (expr.is_constant()) {
          double value = 0.0;
          try {
            value = expr.evaluate(0.0, 0.0, 0.0);
          } catch (const std::domain_error& e) {
            throw Failure(kInvalidArguments, "target", "target expression: " + std::string(e.what()));
          }
          return constant_target(value, std::move(description));
        }
        return ResolvedTarget{evaluate_on_mesh(expr, mesh, geom), std::move(description), std::nullopt};
      }
      case RunConfig::Target::Kind::Csv: {
        const Field K = read_curvature_csv(requested.csv, n);
        return ResolvedTarget{target_from_values(K, geom), json{{"kind", "csv"}, {"path", requested.csv.string()}},
                              std::nullopt};
      }
    }
  } catch (const NegativityViolation& e) {
    throw Failure(kNegativity, "negativity", e.what());
  } catch (const EvaluationError& e) {
    throw Failure(kInvalidArguments, "target", e.what());
  } catch (const ParseError& e) {
    throw Failure(kInvalidArguments, "target", e.what());
  } catch (const IoError& e) {
    throw Failure(kIoFailure, "io", e.what());
  }
  throw Failure(kInvalidArguments, "target", "unknown target kind");
}

const char* file_name(Emit e) {
  switch (e) {
    case Emit::ReportJson: return "report.json";
    case Emit::TraceCsv: return "trace.csv";
    case Emit::SigmaCsv: return "sigma.csv";
    case Emit::ObjWithSigma: return "sigma.obj";
    case Emit::DiagnosticsJsonl: return "diagnostics.jsonl";
  }
  return "";
}

const char* emit_key(Emit e) {
  switch (e) {
    case Emit::ReportJson: return "report_json";
    case Emit::TraceCsv: return "trace_csv";
    case Emit::SigmaCsv: return "sigma_csv";
    case Emit::ObjWithSigma: return "obj_with_sigma";
    case Emit::DiagnosticsJsonl: return "diagnostics_jsonl";
  }
  return "";
}

int run_pipeline(const RunConfig& config, Streams io) {
  TriangleMesh mesh = [&] {
    if (config.generate) {
      try {
        return generate_genus_g(config.generate->genus, config.generate->resolution);
      } catch (const PreconditionError& e) {
        throw Failure(kInvalidArguments, "arguments", e.what());
      }
    }
    return load_mesh(*config.obj);
  }();
  for (int level = 0; level < config.refine_levels; ++level) mesh = refine(mesh);

  const int g = genus_of(mesh);
  genus_guard(g, config.allow_any_genus, io);
  const BackgroundGeometry geom = geometry_of(mesh);
  const ResolvedTarget resolved = resolve_target(config.target, mesh, geom);

  SolverConfig solver = config.solver;
  if (config.initial_sigma_csv) {
    try {
      solver.initial_values = read_vertex_csv(*config.initial_sigma_csv, geom.num_vertices);
    } catch (const IoError& e) {
      throw Failure(kIoFailure, "io", e.what());
    } catch (const ParseError& e) {
      throw Failure(kInvalidArguments, "initial_sigma", e.what());
    }
  }
  if (solver.initial == InitialSigma::User && solver.initial_values.size() != geom.num_vertices) {
    throw Failure(kInvalidArguments, "initial_sigma",
                  "initial sigma has " + std::to_string(solver.initial_values.size()) + " values, mesh has " +
                      std::to_string(geom.num_vertices) + " vertices");
  }

  io.err << "info: solving with " << to_string(solver.method) << " on V=" << geom.num_vertices << " genus " << g
         << "\n";
  SolveReport report;
  try {
    report = solve(geom, resolved.target, solver);
  } catch (const SolverError& e) {
    throw Failure(kNotConverged, "solver", e.what());
  } catch (const RangeError& e) {
    throw Failure(kNotConverged, "solver", e.what());
  } catch (const PreconditionError& e) {
    throw Failure(kInvalidArguments, "arguments", e.what());
  }

  json j;
  j["status"] = to_string(report.status);
  j["method"] = to_string(solver.method);
  j["iterations"] = report.iterations;
  j["b_inf"] = report.final_b_inf();
  j["S"] = report.final_S();
  j["conformal_area"] = conformal_area(geom, report.sigma);
  j["gauss_bonnet_defect"] = report.diagnostics_final.gauss_bonnet_defect;
  j["max_linear_residual"] = report.max_linear_residual;
  j["message"] = report.message;
  j["mesh"] = mesh_summary(mesh, g);
  j["target"] = resolved.description;
  j["diagnostics_final"] = report.diagnostics_final;
  j["bounds"] = report.bounds;
  if (resolved.constant) {
    const double expected = 2.0 * std::numbers::pi * geom.chi / *resolved.constant;
    j["expected_area"] = expected;
    j["uniformization_check"] = std::abs(j["conformal_area"].get<double>() - expected) / expected;
  }

  json outputs = json::object();
  if (!config.emit.empty()) make_directory(config.outputs);
  for (Emit e : config.emit) outputs[emit_key(e)] = (config.outputs / file_name(e)).string();
  j["outputs"] = outputs;

  for (Emit e : config.emit) {
    const fs::path path = config.outputs / file_name(e);
    switch (e) {
      case Emit::ReportJson: write_text(path, j.dump(2) + "\n"); break;
      case Emit::TraceCsv: write_text(path, trace_csv(report)); break;
      case Emit::SigmaCsv: write_text(path, sigma_csv(geom, resolved.target, report.sigma)); break;
      case Emit::DiagnosticsJsonl: write_text(path, diagnostics_jsonl(report)); break;
      case Emit::ObjWithSigma: {
        const std::vector<double> values(report.sigma.data(), report.sigma.data() + report.sigma.size());
        write_text(path, format_obj(mesh, std::span<const double>(values)));
        break;
      }
    }
  }

  io.out << j.dump(2) << "\n";
  if (report.status != SolveStatus::Converged) {
    io.err << "error: solver stopped with status " << to_string(report.status) << ": " << report.message << "\n";
    return kNotConverged;
  }
  return kOk;
}

}  // namespace

RunConfig parse_run_config(const json& j, const fs::path& base_dir) {
  check_keys(j, {"mesh", "refine_levels", "target", "solver", "outputs", "emit", "allow_any_genus"}, "");
  RunConfig config;

  if (!j.contains("mesh")) throw ConfigError("/mesh: required");
  const std::string source = one_of(j["mesh"], {"generate", "obj"}, "/mesh");
  if (source == "generate") {
    const json& gen = j["mesh"]["generate"];
    check_keys(gen, {"genus", "resolution"}, "/mesh/generate");
    RunConfig::Generate g;
    if (!gen.contains("genus")) throw ConfigError("/mesh/generate/genus: required");
    g.genus = integer_of(gen["genus"], "/mesh/generate/genus");
    if (gen.contains("resolution")) g.resolution = integer_of(gen["resolution"], "/mesh/generate/resolution");
    config.generate = g;
  } else {
    config.obj = path_of(j["mesh"]["obj"], "/mesh/obj", base_dir);
  }

  if (j.contains("refine_levels")) {
    config.refine_levels = integer_of(j["refine_levels"], "/refine_levels");
    if (config.refine_levels < 0) throw ConfigError("/refine_levels: must be >= 0");
  }

  if (!j.contains("target")) throw ConfigError("/target: required");
  const std::string kind = one_of(j["target"], {"constant", "expression", "csv"}, "/target");
  if (kind == "constant") {
    config.target.kind = RunConfig::Target::Kind::Constant;
    config.target.value = number_of(j["target"]["constant"], "/target/constant");
  } else if (kind == "expression") {
    config.target.kind = RunConfig::Target::Kind::Expression;
    config.target.expression = string_of(j["target"]["expression"], "/target/expression");
  } else {
    config.target.kind = RunConfig::Target::Kind::Csv;
    config.target.csv = path_of(j["target"]["csv"], "/target/csv", base_dir);
  }

  if (j.contains("solver")) parse_solver(j["solver"], base_dir, config);
  if (j.contains("outputs")) config.outputs = path_of(j["outputs"], "/outputs", base_dir);
  else config.outputs = base_dir / "out";

  if (j.contains("emit")) {
    const json& e = j["emit"];
    if (!e.is_array()) throw ConfigError("/emit: expected an array");
    config.emit.clear();
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::string name = string_of(e[i], "/emit/" + std::to_string(i));
      bool found = false;
      for (Emit candidate : {Emit::ReportJson, Emit::TraceCsv, Emit::SigmaCsv, Emit::ObjWithSigma,
                             Emit::DiagnosticsJsonl}) {
        if (name == emit_key(candidate)) {
          config.emit.insert(candidate);
          found = true;
        }
      }
      if (!found) throw ConfigError("/emit/" + std::to_string(i) + ": unknown output \"" + name + "\"");
    }
  }

  if (j.contains("allow_any_genus")) {
    if (!j["allow_any_genus"].is_boolean()) throw ConfigError("/allow_any_genus: expected a boolean");
    config.allow_any_genus = j["allow_any_genus"].get<bool>();
  }
  return config;
}

int cmd_generate(int genus, int resolution, const fs::path& out_path, Streams io) {
  return guarded(io, [&] {
    TriangleMesh mesh = [&] {
      try {
        return generate_genus_g(genus, resolution);
      } catch (const PreconditionError& e) {
        throw Failure(kInvalidArguments, "arguments", e.what());
      }
    }();
    write_text(out_path, format_obj(mesh));
    json j = mesh_summary(mesh, genus_of(mesh));
    j["status"] = "ok";
    j["path"] = out_path.string();
    io.out << j.dump(2) << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_check(const fs::path& mesh_path, Streams io) {
  return guarded(io, [&] {
    const TriangleMesh mesh = load_mesh(mesh_path);
    const int g = genus_of(mesh);
    const BackgroundGeometry geom = geometry_of(mesh);
    const double total_defect = geom.angle_defects.sum();
    const double gb_error = total_defect - 2.0 * std::numbers::pi * geom.chi;
    const bool ok = std::abs(gb_error) <= 1e-9;

    json j = mesh_summary(mesh, g);
    j["total_angle_defect"] = total_defect;
    j["gauss_bonnet_error"] = gb_error;
    j["min_angle"] = geom.min_angle;
    j["obtuse_fraction"] = geom.obtuse_fraction;
    j["nonnegative_cot_weights"] = geom.all_cot_weights_nonnegative();
    j["wide_angle_faces"] = geom.wide_angle_faces.size();
    j["status"] = ok ? "ok" : "gauss_bonnet_mismatch";
    io.out << j.dump(2) << "\n";
    if (!geom.wide_angle_faces.empty())
      io.err << "warning: " << geom.wide_angle_faces.size() << " faces have an angle within 1e-9 of pi\n";
    if (!ok) {
      io.err << "error: discrete Gauss-Bonnet mismatch " << format_double(gb_error) << "\n";
      return static_cast<int>(kInvalidMesh);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_solve_config(const RunConfig& config, Streams io) {
  return guarded(io, [&] { return run_pipeline(config, io); });
}

int cmd_solve(const fs::path& config_path, bool allow_any_genus, Streams io) {
  return guarded(io, [&] {
    const std::string text = read_text(config_path);
    RunConfig config;
    try {
      config = parse_run_config(json::parse(text), config_path.parent_path());
    } catch (const json::parse_error& e) {
      throw Failure(kInvalidArguments, "config", config_path.string() + ": invalid JSON: " + e.what());
    } catch (const ConfigError& e) {
      throw Failure(kInvalidArguments, "config", config_path.string() + ": " + e.what());
    }
    config.allow_any_genus = config.allow_any_genus || allow_any_genus;
    return run_pipeline(config, io);
  });
}

int cmd_uniformize(const fs::path& mesh_path, const fs::path& out_dir, bool allow_any_genus, Streams io) {
  RunConfig config;
  config.obj = mesh_path;
  config.target.kind = RunConfig::Target::Kind::Constant;
  config.target.value = -1.0;
  config.outputs = out_dir;
  config.emit = {Emit::ReportJson, Emit::SigmaCsv, Emit::ObjWithSigma};
  config.allow_any_genus = allow_any_genus;
  return cmd_solve_config(config, io);
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Prescribed negative curvature solver for closed genus g > 1 surfaces", "prescurv"};
  app.require_subcommand(1);

  int genus = 0, resolution = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("generate", "write a genus-g plate-with-holes mesh as OBJ");
  gen->add_option("--genus", genus, "genus g >= 1")->required();
  gen->add_option("--resolution", resolution, "segments per cell side, >= 2")->required();
  gen->add_option("--out", out_path, "output OBJ path (default genus<g>_r<resolution>.obj)");

  std::string mesh_path;
  auto* check = app.add_subcommand("check", "validate a mesh and report discrete Gauss-Bonnet");
  check->add_option("mesh", mesh_path, "OBJ file")->required();

  std::string config_path;
  bool allow_any_genus = false;
  auto* solve_cmd = app.add_subcommand("solve", "run a solve described by a JSON config");
  solve_cmd->add_option("config", config_path, "config JSON file")->required();
  solve_cmd->add_flag("--allow-any-genus", allow_any_genus, "downgrade the genus g > 1 guard to a warning");

  std::string uni_mesh, uni_out;
  auto* uni = app.add_subcommand("uniformize", "solve for constant curvature -1 with Newton");
  uni->add_option("mesh", uni_mesh, "OBJ file")->required();
  uni->add_option("out_dir", uni_out, "output directory")->required();
  uni->add_flag("--allow-any-genus", allow_any_genus, "downgrade the genus g > 1 guard to a warning");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << json{{"status", "help"}, {"usage", app.help()}}.dump(2) << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_failure(Failure(kInvalidArguments, "arguments", e.what()), io);
  }

  if (gen->parsed()) {
    if (out_path.empty()) out_path = "genus" + std::to_string(genus) + "_r" + std::to_string(resolution) + ".obj";
    return cmd_generate(genus, resolution, out_path, io);
  }
  if (check->parsed()) return cmd_check(mesh_path, io);
  if (solve_cmd->parsed()) return cmd_solve(config_path, allow_any_genus, io);
  return cmd_uniformize(uni_mesh, uni_out, allow_any_genus, io);
}

}  // namespace prescurv::cli
