#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "prescurv/curvature_field.hpp"
#include "prescurv/geometry.hpp"

namespace prescurv {

// Numerical instrumentation of the existence argument: mean-value split,
// Green operator, the three-set partition with its B terms, and the
// Gauss-Bonnet bookkeeping.

struct MeanSplit {
  double mean = 0.0;
  Field tilde;  ///< sigma - mean, zero area-weighted mean
};

/// m(sigma) = sum sigma_i A_i / sum A_i (the denominator is 1 for built geometries).
MeanSplit mean_value_split(const BackgroundGeometry& geom, const Field& sigma);

/// Inverse Laplacian on mean-zero fields: G Delta_h = I - P, with P the
/// projection onto constants. Factorizes once; apply() is cheap.
class GreenOperator {
 public:
  /// Throws SolverError if the mesh graph is disconnected.
  explicit GreenOperator(const BackgroundGeometry& geom);
  ~GreenOperator();
  GreenOperator(GreenOperator&&) noexcept;
  GreenOperator& operator=(GreenOperator&&) noexcept;

  /// Unique mean-zero x with Delta_h x = f - m(f).
  Field apply(const Field& f) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Field green_apply(const BackgroundGeometry& geom, const Field& f);

enum class OmegaSet : unsigned char { One = 0, Two = 1, Three = 2 };

struct OmegaPartition {
  std::vector<OmegaSet> membership;  ///< per vertex
  std::array<double, 3> masses{};    ///< area of each set
  std::array<double, 3> B{};         ///< sum over the set of (K^2 e^{2 sigma} + Delta sigma e^sigma K) A
  double D_squared = 0.0;            ///< max g^4 times total area
};

/// Vertex classification with p = |d_z sigma| and g = grad_ratio:
///   set 1: p > g;  set 2: p <= g and |K| e^sigma > g^2;  set 3: otherwise.
OmegaPartition omega_partition(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma);

struct DiagnosticsSnapshot {
  double laplacian_energy = 0.0;  ///< sum (Delta sigma)^2 A
  double mean_value = 0.0;
  double sigma_tilde_norm = 0.0;
  std::array<double, 3> omega_masses{};
  std::array<double, 3> B_terms{};
  double D_squared = 0.0;
  double gauss_bonnet_defect = 0.0;    ///< sum K(sigma) e^sigma A - 2 pi chi
  double gauss_bonnet_constant = 0.0;  ///< 4 pi (1 - g)
};

DiagnosticsSnapshot snapshot(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma);

/// Whole-trajectory bounds. C1 is the running maximum of the Laplacian energy;
/// `implied_bound` = 4 (C^2 + 3 D^2) with C = sqrt(S_first) + ||K0||, which
/// bounds int (Delta sigma)^2 along any sequence with S <= S_first.
struct TrajectoryBounds {
  double C1 = 0.0;
  double C_squared = 0.0;
  double D_squared = 0.0;
  double implied_bound = 0.0;
  bool within_implied_bound = true;
  /// Discrete B1, B2 never dipped below -1e-9 (1 + |B1| + |B2|).
  bool B1_B2_nonnegative = true;
  /// |B3| <= 3 D^2 + slack held at every iterate.
  bool B3_within_bound = true;
};

TrajectoryBounds trajectory_bounds(const BackgroundGeometry& geom, double first_S,
                                   std::span<const DiagnosticsSnapshot> trace);

/// Slack for the B-term sign checks: 1e-9 (1 + |B1| + |B2|).
double b_term_tolerance(const DiagnosticsSnapshot& s);

}  // namespace prescurv
