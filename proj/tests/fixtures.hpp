#pragma once

#include <stdexcept>
#include <string>

#include "prescurv/curvature_field.hpp"
#include "prescurv/expression.hpp"
#include "prescurv/generator.hpp"
#include "prescurv/solver.hpp"

namespace testing {

// Plate meshes are flat almost everywhere (K0 = 0 there). Rescaling the metric
// by a solution for a strictly negative K gives a background on the same mesh
// whose K0 equals that K up to the solver tolerance, hence K0 < 0 everywhere.
inline prescurv::BackgroundGeometry negative_curvature_background(int genus, int resolution) {
  using namespace prescurv;
  const TriangleMesh mesh = generate_genus_g(genus, resolution);
  const BackgroundGeometry geom = build_geometry(mesh);
  const TargetCurvature target = evaluate_on_mesh(Expression::parse("-1-0.5*tanh(x)"), mesh, geom);
  const SolveReport report = newton_solve(geom, target, SolverConfig{});
  if (report.status != SolveStatus::Converged)
    throw std::runtime_error("fixture solve did not converge: " + report.message);
  return conformally_rescaled(geom, report.sigma);
}

}  // namespace testing
