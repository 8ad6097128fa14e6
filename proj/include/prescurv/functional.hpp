#pragma once

#include "prescurv/curvature_field.hpp"
#include "prescurv/geometry.hpp"

namespace prescurv {

/// Largest sigma for which e^sigma is safely representable.
inline constexpr double kSigmaOverflow = 700.0;

/// Curvature of e^sigma h: e^{-sigma} (K0 - Delta_h sigma / 2).
Field curvature_of(const BackgroundGeometry& geom, const Field& sigma);

/// Euler-Lagrange residual b = K0 - Delta_h sigma / 2 - K e^sigma, which
/// equals (K(sigma) - K) e^sigma. Throws RangeError naming the first vertex
/// with sigma > 700 or a non-finite sigma.
Field residual(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma);

/// S(sigma) = sum_i b_i^2 A_i, the discrete int (K(sigma) - K)^2 e^{2 sigma} dmu.
double functional_value(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma);

/// Euclidean gradient of S: dS/dsigma = 2 (L/2 + diag(-K e^sigma A)) b.
Field functional_gradient(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma);

/// Jacobian of A (.) b(sigma): L/2 + diag(-K e^sigma A). Symmetric positive
/// definite whenever K < 0 on a connected mesh.
SparseMatrix newton_system(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma);

/// sum_i K(sigma)_i e^{sigma_i} A_i; equals 2 pi chi for every sigma.
double total_curvature(const BackgroundGeometry& geom, const Field& sigma);

/// Area of e^sigma h: sum_i e^{sigma_i} A_i.
double conformal_area(const BackgroundGeometry& geom, const Field& sigma);

}  // namespace prescurv
