#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prescurv/mesh.hpp"

namespace prescurv {

// Wavefront OBJ subset: `v x y z`, `f i j k` (1-based, `i/t/n` accepted), `#`
// comments; vt, vn, o, g, s, usemtl and mtllib records are skipped. A
// per-vertex scalar travels as `# vs <index> <value>` comment lines, which
// ordinary OBJ readers ignore. Floats are written with 17 significant digits.

struct ObjContents {
  TriangleMesh mesh;
  /// Present when the file carried `# vs` records for every vertex.
  std::optional<std::vector<double>> scalar;
};

ObjContents parse_obj(const std::string& text);
ObjContents load_obj_with_scalar(const std::filesystem::path& path);
TriangleMesh load_obj(const std::filesystem::path& path);

std::string format_obj(const TriangleMesh& mesh, std::optional<std::span<const double>> scalar = std::nullopt);
void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path,
              std::optional<std::span<const double>> scalar = std::nullopt);

/// "%.17g" formatting shared by every text writer in the project.
std::string format_double(double value);

}  // namespace prescurv
