#pragma once

#include <filesystem>

#include "prescurv/expression.hpp"
#include "prescurv/geometry.hpp"
#include "prescurv/mesh.hpp"

namespace prescurv {

/// Prescribed curvature sampled at vertices.
struct TargetCurvature {
  Field K;           ///< strictly negative
  Field grad_ratio;  ///< |grad K| / (2 |K|), i.e. |d_zbar K| / |K| with |d_zbar K| = |grad K| / 2
};

/// Samples `expr` at vertex positions. Throws NegativityViolation listing every
/// vertex with K >= 0, EvaluationError naming the first vertex where the
/// expression is undefined.
TargetCurvature evaluate_on_mesh(const Expression& expr, const TriangleMesh& mesh, const BackgroundGeometry& geom);

/// Wraps explicit per-vertex values (same checks as evaluate_on_mesh).
TargetCurvature target_from_values(const Field& K, const BackgroundGeometry& geom);

/// K_i = value, grad_ratio = 0. Requires value < 0.
TargetCurvature constant_curvature(double value, int num_vertices);

/// Reads `vertex_index,value` rows (optional header line); all V rows required.
Field read_vertex_csv(const std::filesystem::path& path, int num_vertices);

/// read_vertex_csv for a `vertex_index,K` file.
Field read_curvature_csv(const std::filesystem::path& path, int num_vertices);

}  // namespace prescurv
