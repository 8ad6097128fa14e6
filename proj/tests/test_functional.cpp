#include <doctest.h>

#include <Eigen/Dense>

#include "fixtures.hpp"
#include "prescurv/errors.hpp"
#include "prescurv/functional.hpp"
#include "support.hpp"

using namespace prescurv;
using testing::kPi;

namespace {

struct Case {
  TriangleMesh mesh;
  BackgroundGeometry geom;
  TargetCurvature target;
};

Case tanh_case(int resolution) {
  TriangleMesh m = generate_genus_g(2, resolution);
  BackgroundGeometry g = build_geometry(m);
  TargetCurvature t = evaluate_on_mesh(Expression::parse("-1-0.5*tanh(x)"), m, g);
  return {std::move(m), std::move(g), std::move(t)};
}

// Residual from the definition, with the Laplacian assembled densely from the
// cotangent weights and edge list.
Field residual_oracle(const TriangleMesh& mesh, const BackgroundGeometry& g, const TargetCurvature& t,
                      const Field& sigma) {
  const int n = g.num_vertices;
  Field lap = Field::Zero(n);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const int i = mesh.edges()[e][0], j = mesh.edges()[e][1];
    lap[i] += g.cot_weights[e] * (sigma[j] - sigma[i]);
    lap[j] += g.cot_weights[e] * (sigma[i] - sigma[j]);
  }
  Field b(n);
  for (int i = 0; i < n; ++i) b[i] = g.K0[i] - 0.5 * lap[i] / g.vertex_areas[i] - t.K[i] * std::exp(sigma[i]);
  return b;
}

}  // namespace

TEST_CASE("curvature transform") {
  std::mt19937_64 rng(1);
  const Case c = tanh_case(3);
  const int n = c.geom.num_vertices;
  const double k0max = c.geom.K0.cwiseAbs().maxCoeff();

  CHECK(curvature_of(c.geom, Field::Zero(n)) == c.geom.K0);
  for (double shift : {-0.5, 0.3, 1.0}) {
    const Field k = curvature_of(c.geom, Field::Constant(n, shift));
    CHECK((k - std::exp(-shift) * c.geom.K0).cwiseAbs().maxCoeff() <= 1e-10 * k0max);
  }

  // Gauss-Bonnet for arbitrary sigma, by brute-force summation.
  for (int trial = 0; trial < 10; ++trial) {
    const Field sigma = testing::random_field(rng, n, -2.0, 2.0);
    const Field k = curvature_of(c.geom, sigma);
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += k[i] * std::exp(sigma[i]) * c.geom.vertex_areas[i];
    CHECK(std::abs(total - 2 * kPi * c.geom.chi) <= 1e-9);
    CHECK(std::abs(total_curvature(c.geom, sigma) - 2 * kPi * c.geom.chi) <= 1e-9);
  }
  CHECK_THROWS_AS(curvature_of(c.geom, Field::Zero(n - 1)), PreconditionError);
}

TEST_CASE("residual identities") {
  std::mt19937_64 rng(2);
  const Case c = tanh_case(3);
  const int n = c.geom.num_vertices;
  for (int trial = 0; trial < 10; ++trial) {
    const Field sigma = testing::random_field(rng, n, -3.0, 3.0);
    const Field b = residual(c.geom, c.target, sigma);
    const Field k = curvature_of(c.geom, sigma);
    const Field lap = laplacian_apply(c.geom, sigma);
    for (int i = 0; i < n; ++i) {
      const double scale = std::abs(c.geom.K0[i]) + 0.5 * std::abs(lap[i]) + std::abs(c.target.K[i]) * std::exp(sigma[i]);
      CHECK(std::abs(b[i] - (k[i] - c.target.K[i]) * std::exp(sigma[i])) <= 1e-12 * scale);
    }
    const Field oracle = residual_oracle(c.mesh, c.geom, c.target, sigma);
    CHECK((b - oracle).cwiseAbs().maxCoeff() <= 1e-11 * oracle.cwiseAbs().maxCoeff());

    double lhs = 0.0, ke = 0.0;
    for (int i = 0; i < n; ++i) {
      lhs += b[i] * c.geom.vertex_areas[i];
      ke += c.target.K[i] * std::exp(sigma[i]) * c.geom.vertex_areas[i];
    }
    CHECK(std::abs(lhs - (2 * kPi * c.geom.chi - ke)) <= 1e-9 * (1 + std::abs(ke)));
  }
}

TEST_CASE("constant shift is an exact discrete solution") {
  const Case c = tanh_case(3);
  const int n = c.geom.num_vertices;
  const double k0max = c.geom.K0.cwiseAbs().maxCoeff();
  for (double shift : {-0.5, 0.3, 1.0}) {
    // The residual does not need K < 0; K0 here has both signs.
    const TargetCurvature t{std::exp(-shift) * c.geom.K0, Field::Zero(n)};
    const Field sigma = Field::Constant(n, shift);
    CHECK(residual(c.geom, t, sigma).cwiseAbs().maxCoeff() <= 1e-10 * k0max);
    CHECK(functional_value(c.geom, t, sigma) <= 1e-20 * k0max * k0max);
    CHECK(functional_gradient(c.geom, t, sigma).cwiseAbs().maxCoeff() <= 1e-10 * k0max);
  }
  // Same statement on a background with K0 < 0 everywhere, sigma = 0.
  const BackgroundGeometry neg = testing::negative_curvature_background(2, 3);
  REQUIRE(neg.K0.maxCoeff() < 0.0);
  const TargetCurvature t0 = target_from_values(neg.K0, neg);
  CHECK(residual(neg, t0, Field::Zero(neg.num_vertices)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("functional value") {
  std::mt19937_64 rng(3);
  const Case c = tanh_case(3);
  const int n = c.geom.num_vertices;
  for (int trial = 0; trial < 10; ++trial) {
    const Field sigma = testing::random_field(rng, n);
    // Two passes: residual first, then the weighted sum of squares.
    const Field b = residual_oracle(c.mesh, c.geom, c.target, sigma);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += b[i] * b[i] * c.geom.vertex_areas[i];
    const double value = functional_value(c.geom, c.target, sigma);
    CHECK(value >= 0.0);
    CHECK(value == doctest::Approx(s).epsilon(1e-11));
  }
}

TEST_CASE("gradient matches central differences") {
  std::mt19937_64 rng(4);
  const Case c = tanh_case(2);
  const int n = c.geom.num_vertices;
  REQUIRE(n <= 100);
  const Field sigma = testing::random_field(rng, n, -0.5, 0.5);
  const Field grad = functional_gradient(c.geom, c.target, sigma);
  const double h = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    const Field dir = testing::random_field(rng, n).normalized();
    const double fd = (functional_value(c.geom, c.target, sigma + h * dir) -
                       functional_value(c.geom, c.target, sigma - h * dir)) /
                      (2 * h);
    const double an = grad.dot(dir);
    CAPTURE(trial);
    CHECK(std::abs(fd - an) <= 1e-5 * std::abs(an));
  }

  // Along constants the Laplacian term drops out.
  const Field b = residual(c.geom, c.target, sigma);
  double expected = 0.0;
  for (int i = 0; i < n; ++i)
    expected += -2.0 * c.target.K[i] * std::exp(sigma[i]) * b[i] * c.geom.vertex_areas[i];
  CHECK(grad.sum() == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("Newton system is the Jacobian of A b") {
  std::mt19937_64 rng(5);
  const Case c = tanh_case(2);
  const int n = c.geom.num_vertices;
  const Field sigma = testing::random_field(rng, n);
  const Eigen::MatrixXd J(newton_system(c.geom, c.target, sigma));
  CHECK((J - J.transpose()).cwiseAbs().maxCoeff() == 0.0);
  auto weighted = [&](const Field& s) { return Field(c.geom.vertex_areas.cwiseProduct(residual(c.geom, c.target, s))); };
  const double h = 1e-6;
  for (int trial = 0; trial < 5; ++trial) {
    const Field dir = testing::random_field(rng, n);
    const Field fd = (weighted(sigma + h * dir) - weighted(sigma - h * dir)) / (2 * h);
    const Field an = J * dir;
    CHECK((fd - an).norm() <= 1e-6 * an.norm());
  }
}

TEST_CASE("overflow guard") {
  const Case c = tanh_case(2);
  const int n = c.geom.num_vertices;
  Field sigma = Field::Zero(n);
  sigma[7] = 701.0;
  try {
    residual(c.geom, c.target, sigma);
    FAIL("expected RangeError");
  } catch (const RangeError& e) {
    CHECK(e.vertex() == 7);
    CHECK(std::string(e.what()).find("vertex 7") != std::string::npos);
  }
  sigma[7] = 700.0;
  CHECK_NOTHROW(residual(c.geom, c.target, sigma));
  sigma[3] = std::nan("");
  CHECK_THROWS_AS(functional_value(c.geom, c.target, sigma), RangeError);
  sigma[3] = -std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(functional_gradient(c.geom, c.target, sigma), RangeError);
}

TEST_CASE("conformal area") {
  const Case c = tanh_case(2);
  const int n = c.geom.num_vertices;
  CHECK(conformal_area(c.geom, Field::Zero(n)) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(conformal_area(c.geom, Field::Constant(n, std::log(3.0))) == doctest::Approx(3.0).epsilon(1e-13));
}
