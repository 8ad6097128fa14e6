#pragma once

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "prescurv/geometry.hpp"
#include "prescurv/mesh.hpp"

namespace testing {

using prescurv::Face;
using prescurv::Field;
using prescurv::TriangleMesh;
using prescurv::Vec3;

inline constexpr double kPi = std::numbers::pi;

// Outward-oriented regular tetrahedron inscribed in the cube [-1, 1]^3.
inline std::vector<Vec3> tetra_points() {
  return {Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1), Vec3(-1, -1, 1)};
}
inline std::vector<Face> tetra_faces() { return {{0, 1, 2}, {1, 3, 2}, {0, 2, 3}, {0, 3, 1}}; }
inline TriangleMesh tetrahedron() { return TriangleMesh::build(tetra_points(), tetra_faces()); }

// n x n quad grid wrapped onto a torus of radii (2, 1), each quad split in two.
inline TriangleMesh torus_grid(int n = 4) {
  std::vector<Vec3> pts;
  std::vector<Face> faces;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double u = 2 * kPi * i / n, v = 2 * kPi * j / n;
      pts.emplace_back((2 + std::cos(v)) * std::cos(u), (2 + std::cos(v)) * std::sin(u), std::sin(v));
    }
  auto id = [n](int i, int j) { return ((i + n) % n) * n + (j + n) % n; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return TriangleMesh::build(pts, faces);
}

inline Field random_field(std::mt19937_64& rng, int n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Field f(n);
  for (int i = 0; i < n; ++i) f[i] = dist(rng);
  return f;
}

// Vertices whose incident faces all lie in the plate's top plane, away from
// creases and the hole rims. Shape functions are exact for linear data there.
inline std::vector<int> flat_top_vertices(const TriangleMesh& mesh) {
  double top = -1e300;
  for (const Vec3& p : mesh.vertices()) top = std::max(top, p.z());
  std::vector<char> ok(mesh.num_vertices(), 0), bad(mesh.num_vertices(), 0);
  for (const Face& f : mesh.faces()) {
    bool flat = true;
    for (int v : f) flat = flat && std::abs(mesh.vertices()[v].z() - top) < 1e-12;
    for (int v : f) (flat ? ok : bad)[v] = 1;
  }
  std::vector<int> out;
  for (int i = 0; i < mesh.num_vertices(); ++i)
    if (ok[i] && !bad[i]) out.push_back(i);
  return out;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("prescurv_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing
