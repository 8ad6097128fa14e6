#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "prescurv/solver.hpp"

namespace prescurv::cli {

// Process exit codes. Every failure class maps to exactly one code.
enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,  ///< bad flags, config JSON, expression or target CSV
  kIoFailure = 3,         ///< file cannot be opened, read or written
  kInvalidMesh = 4,       ///< OBJ parse, topology or geometry failure
  kNegativity = 5,        ///< target curvature not strictly negative
  kNotConverged = 6,      ///< solver did not converge or hit a numerical failure
  kGenusGuard = 7,        ///< genus <= 1 without --allow-any-genus
};

struct Streams {
  std::ostream& out;  ///< receives exactly one JSON document
  std::ostream& err;  ///< human-readable log lines
};

enum class Emit { ReportJson, TraceCsv, SigmaCsv, ObjWithSigma, DiagnosticsJsonl };

struct RunConfig {
  struct Generate {
    int genus = 2;
    int resolution = 8;
  };
  struct Target {
    enum class Kind { Constant, Expression, Csv } kind = Kind::Constant;
    double value = -1.0;
    std::string expression;
    std::filesystem::path csv;
  };

  std::optional<Generate> generate;
  std::optional<std::filesystem::path> obj;
  int refine_levels = 0;
  Target target;
  SolverConfig solver;
  /// Per-vertex initial sigma from a `vertex_index,value` CSV (resolved once V is known).
  std::optional<std::filesystem::path> initial_sigma_csv;
  std::filesystem::path outputs = "out";
  std::set<Emit> emit{Emit::ReportJson};
  bool allow_any_genus = false;
};

/// Raised for every config problem; carries a JSON-pointer-like location.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative paths in the config resolve against `base_dir`.
RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir);

int cmd_generate(int genus, int resolution, const std::filesystem::path& out_path, Streams io);
int cmd_check(const std::filesystem::path& mesh_path, Streams io);
int cmd_solve(const std::filesystem::path& config_path, bool allow_any_genus, Streams io);
int cmd_solve_config(const RunConfig& config, Streams io);
int cmd_uniformize(const std::filesystem::path& mesh_path, const std::filesystem::path& out_dir,
                   bool allow_any_genus, Streams io);

/// Full command line (without the program name) to exit code.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace prescurv::cli
