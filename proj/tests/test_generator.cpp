#include <doctest.h>

#include "prescurv/errors.hpp"
#include "prescurv/generator.hpp"
#include "prescurv/geometry.hpp"

using namespace prescurv;

TEST_CASE("Euler characteristic matches the requested genus") {
  for (int g = 1; g <= 4; ++g)
    for (int res = 2; res <= 6; ++res) {
      CAPTURE(g);
      CAPTURE(res);
      const TriangleMesh m = generate_genus_g(g, res);
      CHECK(euler_characteristic(m) == 2 - 2 * g);
      CHECK(genus(m) == g);
      CHECK(m.is_connected());
    }
}

TEST_CASE("doubling the resolution roughly quadruples the face count") {
  const TriangleMesh coarse = generate_genus_g(3, 4);
  const TriangleMesh fine = generate_genus_g(3, 8);
  CHECK(euler_characteristic(fine) == -4);
  const double ratio = double(fine.num_faces()) / coarse.num_faces();
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("plate extent") {
  const int g = 3;
  const TriangleMesh m = generate_genus_g(g, 5);
  for (const Vec3& p : m.vertices()) {
    CHECK(p.x() >= -1e-15);
    CHECK(p.x() <= g + 1e-15);
    CHECK(p.y() >= -1e-15);
    CHECK(p.y() <= 1 + 1e-15);
    CHECK(p.z() >= -1e-15);
    CHECK(p.z() <= 0.25 + 1e-15);
  }
}

TEST_CASE("generated meshes have nonnegative cotangent weights") {
  for (int g = 1; g <= 3; ++g)
    for (int res : {2, 3, 4, 8}) {
      CAPTURE(g);
      CAPTURE(res);
      const BackgroundGeometry geom = build_geometry(generate_genus_g(g, res));
      CHECK(geom.all_cot_weights_nonnegative());
      CHECK(geom.wide_angle_faces.empty());
    }
}

TEST_CASE("deterministic output") {
  const TriangleMesh a = generate_genus_g(2, 4), b = generate_genus_g(2, 4);
  CHECK(a.faces() == b.faces());
  CHECK(a.vertices() == b.vertices());
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(generate_genus_g(0, 8), PreconditionError);
  CHECK_THROWS_AS(generate_genus_g(2, 1), PreconditionError);
}
