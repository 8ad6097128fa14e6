#include <doctest.h>

#include <set>

#include "prescurv/errors.hpp"
#include "prescurv/generator.hpp"
#include "prescurv/mesh.hpp"
#include "support.hpp"

using namespace prescurv;
using testing::tetra_faces;
using testing::tetra_points;

namespace {

template <class Error>
std::string build_error(std::vector<Vec3> pts, std::vector<Face> faces) {
  try {
    TriangleMesh::build(std::move(pts), std::move(faces));
  } catch (const Error& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("tetrahedron counts") {
  const TriangleMesh m = testing::tetrahedron();
  CHECK(m.num_vertices() == 4);
  CHECK(m.num_edges() == 6);
  CHECK(m.num_faces() == 4);
  CHECK(euler_characteristic(m) == 2);
  CHECK(genus(m) == 0);
  CHECK(m.is_connected());
}

TEST_CASE("4x4 torus grid") {
  const TriangleMesh m = testing::torus_grid(4);
  CHECK(m.num_vertices() == 16);
  CHECK(m.num_edges() == 48);
  CHECK(m.num_faces() == 32);
  CHECK(euler_characteristic(m) == 0);
  CHECK(genus(m) == 1);
}

TEST_CASE("edges are sorted pairs with consistent incidence") {
  const TriangleMesh m = generate_genus_g(2, 3);
  const auto& edges = m.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    CHECK(edges[e][0] < edges[e][1]);
    if (e > 0) CHECK(edges[e - 1] < edges[e]);
    CHECK(m.find_edge(edges[e][0], edges[e][1]) == static_cast<int>(e));
    CHECK(m.find_edge(edges[e][1], edges[e][0]) == static_cast<int>(e));
    // Each edge is traversed once in each direction by its two faces.
    int forward = 0, backward = 0;
    for (int f : m.edge_faces()[e]) {
      const Face& face = m.faces()[f];
      for (int k = 0; k < 3; ++k) {
        if (face[k] == edges[e][0] && face[(k + 1) % 3] == edges[e][1]) ++forward;
        if (face[k] == edges[e][1] && face[(k + 1) % 3] == edges[e][0]) ++backward;
      }
    }
    CHECK(forward == 1);
    CHECK(backward == 1);
  }
  for (int f = 0; f < m.num_faces(); ++f)
    for (int k = 0; k < 3; ++k) {
      const Edge& e = edges[m.face_edges()[f][k]];
      const std::set<int> opposite{m.faces()[f][(k + 1) % 3], m.faces()[f][(k + 2) % 3]};
      CHECK(opposite == std::set<int>{e[0], e[1]});
    }
  CHECK(m.find_edge(0, 0) == -1);
}

TEST_CASE("open mesh names the boundary edge") {
  auto faces = tetra_faces();
  faces.pop_back();
  const std::string msg = build_error<TopologyError>(tetra_points(), faces);
  CHECK(msg.find("boundary edge") != std::string::npos);
}

TEST_CASE("flipped face is an orientation error") {
  auto faces = tetra_faces();
  std::swap(faces[2][1], faces[2][2]);
  const std::string msg = build_error<TopologyError>(tetra_points(), faces);
  CHECK(msg.find("orientation") != std::string::npos);
}

TEST_CASE("edge shared by four faces is non-manifold") {
  // Two tetrahedra glued along edge {0, 1} only: that edge carries four faces.
  auto pts = tetra_points();
  pts.emplace_back(3, 3, 3);
  pts.emplace_back(3, -3, -3);
  auto faces = tetra_faces();
  faces.push_back({1, 0, 4});
  faces.push_back({0, 5, 4});
  faces.push_back({1, 4, 5});
  faces.push_back({0, 1, 5});
  const std::string msg = build_error<TopologyError>(pts, faces);
  CHECK(msg.find("non-manifold edge") != std::string::npos);
}

TEST_CASE("bow-tie vertex is rejected") {
  auto pts = tetra_points();
  for (int i = 1; i < 4; ++i) pts.push_back(2 * pts[0] - tetra_points()[i]);
  std::vector<Face> faces = tetra_faces();
  // Second tetrahedron on vertices {0, 4, 5, 6}, touching the first at vertex 0.
  for (Face f : tetra_faces()) {
    for (int& v : f)
      if (v != 0) v += 3;
    faces.push_back(f);
  }
  const std::string msg = build_error<TopologyError>(pts, faces);
  CHECK(msg.find("non-manifold vertex 0") != std::string::npos);
}

TEST_CASE("input validation") {
  SUBCASE("index out of range") {
    auto faces = tetra_faces();
    faces[0][2] = 9;
    CHECK_THROWS_AS(TriangleMesh::build(tetra_points(), faces), PreconditionError);
  }
  SUBCASE("repeated vertex in a face") {
    auto faces = tetra_faces();
    faces[0] = {0, 0, 2};
    CHECK(build_error<TopologyError>(tetra_points(), faces).find("repeats") != std::string::npos);
  }
  SUBCASE("duplicate face") {
    auto faces = tetra_faces();
    faces.push_back({1, 2, 0});
    CHECK_THROWS_AS(TriangleMesh::build(tetra_points(), faces), TopologyError);
  }
  SUBCASE("isolated vertex") {
    auto pts = tetra_points();
    pts.emplace_back(5, 5, 5);
    CHECK(build_error<TopologyError>(pts, tetra_faces()).find("isolated vertex 4") != std::string::npos);
  }
  SUBCASE("collinear face") {
    std::vector<Vec3> pts{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(2, 0, 0), Vec3(0, 1, 0)};
    CHECK_THROWS_AS(TriangleMesh::build(pts, tetra_faces()), GeometryError);
  }
  SUBCASE("no faces") { CHECK_THROWS_AS(TriangleMesh::build({}, {}), TopologyError); }
}

TEST_CASE("disconnected mesh has no genus") {
  auto pts = tetra_points();
  for (const Vec3& p : tetra_points()) pts.push_back(p + Vec3(10, 0, 0));
  auto faces = tetra_faces();
  for (Face f : tetra_faces()) faces.push_back({f[0] + 4, f[1] + 4, f[2] + 4});
  const TriangleMesh m = TriangleMesh::build(pts, faces);
  CHECK_FALSE(m.is_connected());
  CHECK(euler_characteristic(m) == 4);
  CHECK_THROWS_AS(genus(m), TopologyError);
}

TEST_CASE("refinement") {
  const TriangleMesh tet = testing::tetrahedron();
  const TriangleMesh r = refine(tet);
  CHECK(r.num_vertices() == 10);
  CHECK(r.num_faces() == 16);
  CHECK(r.num_edges() == 24);
  CHECK(euler_characteristic(r) == 2);
  for (int e = 0; e < tet.num_edges(); ++e) {
    const Vec3 mid = 0.5 * (tet.vertices()[tet.edges()[e][0]] + tet.vertices()[tet.edges()[e][1]]);
    CHECK((r.vertices()[4 + e] - mid).norm() == doctest::Approx(0.0));
  }
  CHECK(r.surface_area() == doctest::Approx(tet.surface_area()).epsilon(1e-14));

  const TriangleMesh g2 = generate_genus_g(2, 2);
  const TriangleMesh rr = refine(refine(g2));
  CHECK(rr.num_faces() == 16 * g2.num_faces());
  CHECK(euler_characteristic(rr) == -2);
  CHECK(genus(rr) == 2);
}

TEST_CASE("scaled_to_area") {
  const TriangleMesh m = scaled_to_area(generate_genus_g(2, 3), 1.0);
  CHECK(m.surface_area() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(scaled_to_area(m, 0.0), PreconditionError);
}
