#include "prescurv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include "prescurv/errors.hpp"
#include "prescurv/functional.hpp"
#include "prescurv/obj_io.hpp"

namespace prescurv {

namespace {

constexpr int kDirectSolveLimit = 100000;

struct Evaluation {
  Field b;
  double S = 0.0;
};

Evaluation evaluate(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma) {
  Evaluation e;
  e.b = residual(geom, target, sigma);
  e.S = e.b.cwiseProduct(e.b).dot(geom.vertex_areas);
  return e;
}

void require_negative_target(const BackgroundGeometry& geom, const TargetCurvature& target) {
  require_length(geom, target.K, "target curvature");
  std::vector<int> bad;
  for (int i = 0; i < target.K.size(); ++i)
    if (!(target.K[i] < 0.0)) bad.push_back(i);
  if (!bad.empty())
    throw NegativityViolation("hypothesis K<0 violated at " + std::to_string(bad.size()) + " vertices", bad);
}

class Recorder {
 public:
  Recorder(const BackgroundGeometry& geom, const TargetCurvature& target, SolveReport& report)
      : geom_(geom), target_(target), report_(report) {}

  void record(int iteration, const Field& sigma, const Evaluation& e, double step) {
    DiagnosticsSnapshot snap = snapshot(geom_, target_, sigma);
    IterationRecord r;
    r.iteration = iteration;
    r.S = e.S;
    r.b_inf = e.b.lpNorm<Eigen::Infinity>();
    r.b_l2 = std::sqrt(e.S);
    r.step = step;
    r.mean_value = snap.mean_value;
    r.laplacian_energy = snap.laplacian_energy;
    report_.trace.push_back(r);
    report_.diagnostics.push_back(snap);
  }

  void finish(const Field& sigma, double tol) {
    report_.sigma = sigma;
    report_.iterations = report_.trace.back().iteration;
    report_.diagnostics_final = report_.diagnostics.back();
    report_.bounds = trajectory_bounds(geom_, report_.trace.front().S, report_.diagnostics);
    if (report_.final_b_inf() <= tol) {
      report_.status = SolveStatus::Converged;
    } else if (report_.message.empty()) {
      report_.message = "stopped after " + std::to_string(report_.iterations) + " iterations with max |b| = " +
                        format_double(report_.final_b_inf());
    }
  }

 private:
  const BackgroundGeometry& geom_;
  const TargetCurvature& target_;
  SolveReport& report_;
};

// SPD solve of J x = r to a relative residual of `tol`, with a few rounds of
// iterative refinement if the first pass falls short.
class SpdSolver {
 public:
  SpdSolver(LinearSolver kind, int n, double tol)
      : use_cg_(kind == LinearSolver::ConjugateGradient || (kind == LinearSolver::Auto && n > kDirectSolveLimit)),
        tol_(tol) {}

  Field solve(const SparseMatrix& J, const Field& r, double& relative_residual) {
    Field x;
    if (use_cg_) {
      cg_.setTolerance(0.1 * tol_);
      cg_.setMaxIterations(std::max<int>(1000, 10 * static_cast<int>(J.rows())));
      cg_.compute(J);
      x = cg_.solve(r);
    } else {
      if (!analyzed_) {
        ldlt_.analyzePattern(J);
        analyzed_ = true;
      }
      ldlt_.factorize(J);
      if (ldlt_.info() != Eigen::Success || !(ldlt_.vectorD().minCoeff() > 0.0))
        throw SolverError("Newton system is not symmetric positive definite (factorization failed)");
      x = ldlt_.solve(r);
    }
    const double rnorm = r.norm();
    relative_residual = rnorm > 0 ? (J * x - r).norm() / rnorm : 0.0;
    for (int round = 0; round < 3 && relative_residual > tol_; ++round) {
      const Field correction = use_cg_ ? Field(cg_.solve(r - J * x)) : Field(ldlt_.solve(r - J * x));
      x += correction;
      relative_residual = (J * x - r).norm() / rnorm;
    }
    if (relative_residual > tol_)
      throw SolverError("linear solve reached relative residual " + format_double(relative_residual) +
                        ", above the required " + format_double(tol_));
    return x;
  }

 private:
  bool use_cg_;
  double tol_;
  bool analyzed_ = false;
  Eigen::SimplicialLDLT<SparseMatrix> ldlt_;
  Eigen::ConjugateGradient<SparseMatrix, Eigen::Lower | Eigen::Upper, Eigen::DiagonalPreconditioner<double>> cg_;
};

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIterations: return "max_iterations";
    case SolveStatus::LineSearchFailure: return "line_search_failure";
  }
  return "unknown";
}

const char* to_string(Method m) { return m == Method::Newton ? "newton" : "descent"; }

void SolverConfig::validate() const {
  if (!(residual_tol > 0.0)) throw PreconditionError("residual_tol must be positive");
  if (max_iterations && *max_iterations <= 0) throw PreconditionError("max_iterations must be positive");
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw PreconditionError("armijo_c must lie in (0, 1)");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0))
    throw PreconditionError("backtrack_factor must lie in (0, 1)");
  if (!(min_step > 0.0)) throw PreconditionError("min_step must be positive");
  if (!(damping > 0.0)) throw PreconditionError("damping must be positive");
  if (!(linear_tol > 0.0)) throw PreconditionError("linear_tol must be positive");
}

Field initial_sigma(const BackgroundGeometry& geom, const TargetCurvature& target, const SolverConfig& config) {
  const int n = geom.num_vertices;
  switch (config.initial) {
    case InitialSigma::Zeros: return Field::Zero(n);
    case InitialSigma::GaussBonnetConstant: {
      const double ratio = 2.0 * std::numbers::pi * geom.chi / target.K.dot(geom.vertex_areas);
      return ratio > 0.0 ? Field::Constant(n, std::log(ratio)) : Field::Zero(n);
    }
    case InitialSigma::User:
      require_length(geom, config.initial_values, "initial sigma");
      if (!config.initial_values.allFinite()) throw PreconditionError("initial sigma has non-finite entries");
      return config.initial_values;
  }
  return Field::Zero(n);
}

SolveReport newton_solve(const BackgroundGeometry& geom, const TargetCurvature& target, const SolverConfig& config) {
  config.validate();
  require_negative_target(geom, target);
  const int max_it = config.resolved_max_iterations();

  SolveReport report;
  Recorder rec(geom, target, report);
  Field sigma = initial_sigma(geom, target, config);
  Evaluation cur = evaluate(geom, target, sigma);
  rec.record(0, sigma, cur, 0.0);
  SpdSolver linear(config.linear_solver, geom.num_vertices, config.linear_tol);

  for (int it = 1; it <= max_it; ++it) {
    if (cur.b.lpNorm<Eigen::Infinity>() <= config.residual_tol) break;

    const SparseMatrix J = newton_system(geom, target, sigma);
    const Field rhs = -geom.vertex_areas.cwiseProduct(cur.b);
    double rel = 0.0;
    const Field delta = linear.solve(J, rhs, rel);
    report.max_linear_residual = std::max(report.max_linear_residual, rel);

    // Armijo on phi = S/2, whose directional derivative along delta is -S.
    double t = config.damping;
    bool accepted = false;
    Field trial;
    Evaluation next;
    std::string last_failure;
    while (t >= config.min_step) {
      trial = sigma + t * delta;
      try {
        next = evaluate(geom, target, trial);
        if (next.S <= cur.S * (1.0 - 2.0 * config.armijo_c * t)) {
          accepted = true;
          break;
        }
      } catch (const RangeError& e) {
        last_failure = e.what();
      }
      t *= config.backtrack_factor;
    }
    if (!accepted) {
      report.message = "Newton line search fell below min_step at iteration " + std::to_string(it);
      if (!last_failure.empty()) report.message += " (" + last_failure + ")";
      rec.finish(sigma, config.residual_tol);
      if (report.status != SolveStatus::Converged) report.status = SolveStatus::LineSearchFailure;
      return report;
    }
    sigma = std::move(trial);
    cur = std::move(next);
    rec.record(it, sigma, cur, t);
  }
  rec.finish(sigma, config.residual_tol);
  return report;
}

SolveReport descent_minimize(const BackgroundGeometry& geom, const TargetCurvature& target,
                             const SolverConfig& config) {
  config.validate();
  require_negative_target(geom, target);
  const int max_it = config.resolved_max_iterations();

  Eigen::SimplicialLDLT<SparseMatrix> metric;
  const bool sobolev = config.descent_metric == DescentMetric::Sobolev;
  if (sobolev) {
    SparseMatrix P = 0.5 * geom.stiffness;
    for (int i = 0; i < geom.num_vertices; ++i) P.coeffRef(i, i) += geom.vertex_areas[i];
    metric.compute(P);
    if (metric.info() != Eigen::Success) throw SolverError("descent metric factorization failed");
  }

  SolveReport report;
  Recorder rec(geom, target, report);
  Field sigma = initial_sigma(geom, target, config);
  Evaluation cur = evaluate(geom, target, sigma);
  rec.record(0, sigma, cur, 0.0);

  double t_prev = 1.0;
  for (int it = 1; it <= max_it; ++it) {
    if (cur.b.lpNorm<Eigen::Infinity>() <= config.residual_tol) break;

    const Field grad = functional_gradient(geom, target, sigma);
    Field direction;
    if (sobolev) {
      const Field half = metric.solve(grad);
      direction = -metric.solve(geom.vertex_areas.cwiseProduct(half));
    } else {
      direction = -grad;
    }
    const double slope = grad.dot(direction);
    if (!(slope < 0.0)) {
      report.message = "descent direction lost (slope " + format_double(slope) + ")";
      rec.finish(sigma, config.residual_tol);
      if (report.status != SolveStatus::Converged) report.status = SolveStatus::LineSearchFailure;
      return report;
    }

    double t = std::min(2.0 * t_prev, 1e8);
    bool accepted = false;
    Field trial;
    Evaluation next;
    std::string last_failure;
    while (t >= config.min_step) {
      trial = sigma + t * direction;
      try {
        next = evaluate(geom, target, trial);
        if (next.S < cur.S && next.S <= cur.S + config.armijo_c * t * slope) {
          accepted = true;
          break;
        }
      } catch (const RangeError& e) {
        last_failure = e.what();
      }
      t *= config.backtrack_factor;
    }
    if (!accepted) {
      report.message = "descent line search fell below min_step at iteration " + std::to_string(it);
      if (!last_failure.empty()) report.message += " (" + last_failure + ")";
      rec.finish(sigma, config.residual_tol);
      if (report.status != SolveStatus::Converged) report.status = SolveStatus::LineSearchFailure;
      return report;
    }
    t_prev = t;
    sigma = std::move(trial);
    cur = std::move(next);
    rec.record(it, sigma, cur, t);
  }
  rec.finish(sigma, config.residual_tol);
  return report;
}

SolveReport solve(const BackgroundGeometry& geom, const TargetCurvature& target, const SolverConfig& config) {
  return config.method == Method::Newton ? newton_solve(geom, target, config)
                                         : descent_minimize(geom, target, config);
}

}  // namespace prescurv
