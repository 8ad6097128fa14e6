#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "prescurv/mesh.hpp"

namespace prescurv {

using Field = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

// Discrete background metric h built from an embedded mesh.
//
// Conventions:
//  * The metric is rescaled so the total area is 1. Areas, K0 and gradient
//    magnitudes are expressed in that normalized metric; cotangent weights are
//    scale free. Raw edge lengths and the raw area are kept for reference.
//  * `stiffness` is the positive semidefinite cotangent operator L with
//    off-diagonals -w_ij and zero row sums. The surface Laplacian is
//    Delta_h = -A^{-1} L, negative semidefinite in the area-weighted product.
//  * K0_i = (2 pi - angle sum at i) / A_i, so sum_i K0_i A_i = 2 pi chi.
struct BackgroundGeometry {
  int num_vertices = 0;
  int chi = 0;
  double total_area_raw = 0.0;

  Field edge_lengths;   ///< raw units, per mesh edge
  Field cot_weights;    ///< w_ij = (cot alpha + cot beta) / 2
  SparseMatrix stiffness;
  Field vertex_areas;   ///< barycentric, normalized to sum 1
  Field angle_defects;  ///< 2 pi - sum of incident angles
  Field K0;             ///< angle_defects / vertex_areas

  std::vector<Face> faces;
  Field face_areas;  ///< normalized
  std::vector<std::array<double, 3>> corner_angles;
  /// Gradients of the three hat functions of each face, normalized metric.
  std::vector<std::array<Vec3, 3>> hat_gradients;
  /// Pointwise metric scale e^{sigma0} for conformally rescaled backgrounds; 1 otherwise.
  Field metric_scale;

  /// Faces with an angle >= pi - 1e-9 (nearly flat triangles).
  std::vector<int> wide_angle_faces;
  double min_angle = 0.0;
  double obtuse_fraction = 0.0;

  double total_area() const { return vertex_areas.sum(); }
  bool all_cot_weights_nonnegative() const { return cot_weights.minCoeff() >= 0.0; }
};

/// Throws GeometryError if a face fails the strict triangle inequality.
BackgroundGeometry build_geometry(const TriangleMesh& mesh);

/// Background for the metric e^{sigma0} h on the same mesh: vertex areas pick
/// up e^{sigma0} and K0 becomes the curvature of the rescaled metric, so that
/// solving for sigma' on the result is equivalent to solving for sigma0 + sigma'
/// on `geom`. The total area is Sum e^{sigma0} A and is not renormalized.
BackgroundGeometry conformally_rescaled(const BackgroundGeometry& geom, const Field& sigma0);

/// (Delta_h f)_i = -(L f)_i / A_i.
Field laplacian_apply(const BackgroundGeometry& geom, const Field& f);

/// Per-vertex |d_z f|^2 = |grad f|^2 / 4, from face gradients of the piecewise
/// linear interpolant averaged to vertices with area weights. Summed against
/// the vertex areas this equals f^T L f / 4.
Field dirichlet_gradient_density(const BackgroundGeometry& geom, const Field& f);

/// Area-weighted average of piecewise-linear face gradients at each vertex.
std::vector<Vec3> vertex_gradients(const BackgroundGeometry& geom, const Field& f);

void require_length(const BackgroundGeometry& geom, const Field& f, const char* what);

}  // namespace prescurv
