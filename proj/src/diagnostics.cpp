#include "prescurv/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include <Eigen/SparseCholesky>

#include "prescurv/errors.hpp"
#include "prescurv/functional.hpp"

namespace prescurv {

MeanSplit mean_value_split(const BackgroundGeometry& geom, const Field& sigma) {
  require_length(geom, sigma, "sigma");
  MeanSplit out;
  out.mean = sigma.dot(geom.vertex_areas) / geom.total_area();
  out.tilde = sigma.array() - out.mean;
  return out;
}

struct GreenOperator::Impl {
  Field areas;
  // Vertex 0 is pinned; the remaining block of L is SPD on a connected mesh.
  Eigen::SimplicialLDLT<SparseMatrix> reduced;
};

namespace {

bool stiffness_connected(const SparseMatrix& L) {
  const int n = static_cast<int>(L.rows());
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (SparseMatrix::InnerIterator it(L, v); it; ++it) {
      const int w = static_cast<int>(it.row());
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        frontier.push(w);
      }
    }
  }
  return visited == n;
}

}  // namespace

GreenOperator::GreenOperator(const BackgroundGeometry& geom) : impl_(std::make_unique<Impl>()) {
  if (!stiffness_connected(geom.stiffness))
    throw SolverError("Green operator needs a connected mesh; the Laplacian kernel is larger than the constants");
  impl_->areas = geom.vertex_areas;
  const int n = geom.num_vertices;
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(geom.stiffness.nonZeros());
  for (int col = 1; col < n; ++col)
    for (SparseMatrix::InnerIterator it(geom.stiffness, col); it; ++it)
      if (it.row() > 0) triplets.emplace_back(static_cast<int>(it.row()) - 1, col - 1, it.value());
  SparseMatrix block(n - 1, n - 1);
  block.setFromTriplets(triplets.begin(), triplets.end());
  impl_->reduced.compute(block);
  if (impl_->reduced.info() != Eigen::Success || impl_->reduced.vectorD().minCoeff() <= 0.0)
    throw SolverError("Green operator factorization failed (singular Laplacian block)");
}

GreenOperator::~GreenOperator() = default;
GreenOperator::GreenOperator(GreenOperator&&) noexcept = default;
GreenOperator& GreenOperator::operator=(GreenOperator&&) noexcept = default;

Field GreenOperator::apply(const Field& f) const {
  const Field& A = impl_->areas;
  if (f.size() != A.size()) throw PreconditionError("field length does not match the Green operator");
  const double total = A.sum();
  const double mean = f.dot(A) / total;
  // Delta x = f - m  <=>  L x = -A (f - m); the right side sums to zero.
  const Field rhs = -(A.array() * (f.array() - mean)).matrix();
  Field x = Field::Zero(f.size());
  x.tail(f.size() - 1) = impl_->reduced.solve(rhs.tail(f.size() - 1));
  const double xmean = x.dot(A) / total;
  return x.array() - xmean;
}

Field green_apply(const BackgroundGeometry& geom, const Field& f) {
  require_length(geom, f, "field");
  return GreenOperator(geom).apply(f);
}

OmegaPartition omega_partition(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma) {
  require_length(geom, sigma, "sigma");
  require_length(geom, target.K, "target curvature");
  const Field density = dirichlet_gradient_density(geom, sigma);
  const Field lap = laplacian_apply(geom, sigma);
  const Field& A = geom.vertex_areas;

  OmegaPartition out;
  out.membership.resize(geom.num_vertices);
  for (int i = 0; i < geom.num_vertices; ++i) {
    const double p = std::sqrt(density[i]);
    const double g = target.grad_ratio[i];
    const double es = std::exp(sigma[i]);
    const double K = target.K[i];
    OmegaSet set = OmegaSet::Three;
    if (p > g)
      set = OmegaSet::One;
    else if (std::abs(K) * es > g * g)
      set = OmegaSet::Two;
    out.membership[i] = set;
    const int s = static_cast<int>(set);
    out.masses[s] += A[i];
    out.B[s] += (K * K * es * es + lap[i] * es * K) * A[i];
  }
  const double gmax = target.grad_ratio.size() ? target.grad_ratio.maxCoeff() : 0.0;
  out.D_squared = std::pow(gmax, 4) * geom.total_area();
  return out;
}

DiagnosticsSnapshot snapshot(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma) {
  DiagnosticsSnapshot s;
  const Field lap = laplacian_apply(geom, sigma);
  s.laplacian_energy = lap.cwiseProduct(lap).dot(geom.vertex_areas);
  const MeanSplit split = mean_value_split(geom, sigma);
  s.mean_value = split.mean;
  s.sigma_tilde_norm = std::sqrt(split.tilde.cwiseProduct(split.tilde).dot(geom.vertex_areas));
  const OmegaPartition part = omega_partition(geom, target, sigma);
  s.omega_masses = part.masses;
  s.B_terms = part.B;
  s.D_squared = part.D_squared;
  s.gauss_bonnet_constant = 2.0 * std::numbers::pi * geom.chi;  // 4 pi (1 - g) with chi = 2 - 2g
  s.gauss_bonnet_defect = total_curvature(geom, sigma) - s.gauss_bonnet_constant;
  return s;
}

double b_term_tolerance(const DiagnosticsSnapshot& s) {
  return 1e-9 * (1.0 + std::abs(s.B_terms[0]) + std::abs(s.B_terms[1]));
}

TrajectoryBounds trajectory_bounds(const BackgroundGeometry& geom, double first_S,
                                   std::span<const DiagnosticsSnapshot> trace) {
  TrajectoryBounds out;
  const double k0_norm = std::sqrt(geom.K0.cwiseProduct(geom.K0).dot(geom.vertex_areas));
  const double C = std::sqrt(std::max(first_S, 0.0)) + k0_norm;
  out.C_squared = C * C;
  for (const DiagnosticsSnapshot& s : trace) {
    out.C1 = std::max(out.C1, s.laplacian_energy);
    out.D_squared = std::max(out.D_squared, s.D_squared);
    const double tol = b_term_tolerance(s);
    if (s.B_terms[0] < -tol || s.B_terms[1] < -tol) out.B1_B2_nonnegative = false;
    if (std::abs(s.B_terms[2]) > 3.0 * s.D_squared + tol) out.B3_within_bound = false;
  }
  out.implied_bound = 4.0 * (out.C_squared + 3.0 * out.D_squared);
  out.within_implied_bound = out.C1 <= out.implied_bound;
  return out;
}

}  // namespace prescurv
