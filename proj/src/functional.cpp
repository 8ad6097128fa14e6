#include "prescurv/functional.hpp"

#include <cmath>
#include <string>

#include "prescurv/errors.hpp"
#include "prescurv/obj_io.hpp"

namespace prescurv {

namespace {

void guard_range(const Field& sigma) {
  for (int i = 0; i < sigma.size(); ++i)
    if (!(std::isfinite(sigma[i]) && sigma[i] <= kSigmaOverflow))
      throw RangeError("sigma at vertex " + std::to_string(i) + " is " + format_double(sigma[i]) +
                           "; exp(sigma) overflows beyond sigma = 700",
                       i);
}

void check_target(const BackgroundGeometry& geom, const TargetCurvature& target) {
  require_length(geom, target.K, "target curvature");
}

}  // namespace

Field curvature_of(const BackgroundGeometry& geom, const Field& sigma) {
  require_length(geom, sigma, "sigma");
  const Field lap = laplacian_apply(geom, sigma);
  return ((geom.K0 - 0.5 * lap).array() * (-sigma.array()).exp()).matrix();
}

Field residual(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma) {
  require_length(geom, sigma, "sigma");
  check_target(geom, target);
  guard_range(sigma);
  const Field lap = laplacian_apply(geom, sigma);
  return (geom.K0 - 0.5 * lap).array() - target.K.array() * sigma.array().exp();
}

double functional_value(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma) {
  const Field b = residual(geom, target, sigma);
  return b.cwiseProduct(b).dot(geom.vertex_areas);
}

Field functional_gradient(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma) {
  const Field b = residual(geom, target, sigma);
  const Field diag = (-target.K.array() * sigma.array().exp() * geom.vertex_areas.array()).matrix();
  return 2.0 * (0.5 * (geom.stiffness * b) + diag.cwiseProduct(b));
}

SparseMatrix newton_system(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma) {
  require_length(geom, sigma, "sigma");
  check_target(geom, target);
  guard_range(sigma);
  SparseMatrix J = 0.5 * geom.stiffness;
  for (int i = 0; i < geom.num_vertices; ++i)
    J.coeffRef(i, i) += -target.K[i] * std::exp(sigma[i]) * geom.vertex_areas[i];
  return J;
}

double total_curvature(const BackgroundGeometry& geom, const Field& sigma) {
  const Field k = curvature_of(geom, sigma);
  return (k.array() * sigma.array().exp() * geom.vertex_areas.array()).sum();
}

double conformal_area(const BackgroundGeometry& geom, const Field& sigma) {
  require_length(geom, sigma, "sigma");
  return (sigma.array().exp() * geom.vertex_areas.array()).sum();
}

}  // namespace prescurv
