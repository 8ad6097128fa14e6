#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prescurv/curvature_field.hpp"
#include "prescurv/diagnostics.hpp"
#include "prescurv/geometry.hpp"

namespace prescurv {

enum class Method { Newton, Descent };
enum class InitialSigma { Zeros, GaussBonnetConstant, User };
enum class LinearSolver { Auto, Direct, ConjugateGradient };
/// Inner product that defines "steepest" for descent_minimize.
enum class DescentMetric {
  Euclidean,  ///< raw vertex coordinates
  Sobolev,    ///< <u, v> = u^T P A^{-1} P v with P = L/2 + diag(A), a W^{2,2}-type norm
};

struct SolverConfig {
  Method method = Method::Newton;
  double residual_tol = 1e-10;        ///< on max |b_i|
  std::optional<int> max_iterations;  ///< default 100 (Newton) / 20000 (descent)
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;
  double min_step = 1e-14;
  InitialSigma initial = InitialSigma::Zeros;
  Field initial_values;  ///< used when initial == User
  double damping = 1.0;  ///< first trial step of each Newton line search
  LinearSolver linear_solver = LinearSolver::Auto;
  DescentMetric descent_metric = DescentMetric::Sobolev;
  /// Relative residual every inner linear solve must reach.
  double linear_tol = 1e-12;

  int resolved_max_iterations() const { return max_iterations.value_or(method == Method::Newton ? 100 : 20000); }
  /// Throws PreconditionError when a field is outside its documented range.
  void validate() const;
};

enum class SolveStatus { Converged, MaxIterations, LineSearchFailure };

const char* to_string(SolveStatus s);
const char* to_string(Method m);

struct IterationRecord {
  int iteration = 0;
  double S = 0.0;
  double b_inf = 0.0;
  double b_l2 = 0.0;  ///< sqrt(S), the L^2(dmu) norm of b
  double step = 0.0;
  double mean_value = 0.0;
  double laplacian_energy = 0.0;
};

struct SolveReport {
  Field sigma;
  SolveStatus status = SolveStatus::MaxIterations;
  int iterations = 0;
  std::vector<IterationRecord> trace;
  std::vector<DiagnosticsSnapshot> diagnostics;  ///< one per trace entry
  DiagnosticsSnapshot diagnostics_final;
  TrajectoryBounds bounds;
  std::string message;  ///< context for non-converged runs
  /// Worst relative residual seen in the inner linear solves (Newton only).
  double max_linear_residual = 0.0;

  double final_b_inf() const { return trace.empty() ? 0.0 : trace.back().b_inf; }
  double final_S() const { return trace.empty() ? 0.0 : trace.back().S; }
};

/// sigma_0 per config.initial. The Gauss-Bonnet constant is
/// log(2 pi chi / sum K A) when that argument is positive, zeros otherwise.
Field initial_sigma(const BackgroundGeometry& geom, const TargetCurvature& target, const SolverConfig& config);

/// Damped Newton on b(sigma) = 0 with Armijo backtracking on S / 2.
/// Throws SolverError if the Newton system fails to factor as SPD.
SolveReport newton_solve(const BackgroundGeometry& geom, const TargetCurvature& target, const SolverConfig& config);

/// Steepest descent on S with Armijo backtracking; S strictly decreases on
/// every accepted step.
SolveReport descent_minimize(const BackgroundGeometry& geom, const TargetCurvature& target,
                             const SolverConfig& config);

/// Dispatches on config.method.
SolveReport solve(const BackgroundGeometry& geom, const TargetCurvature& target, const SolverConfig& config);

}  // namespace prescurv
