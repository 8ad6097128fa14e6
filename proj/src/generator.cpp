#include "prescurv/generator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include "prescurv/errors.hpp"

namespace prescurv {

namespace {

constexpr double kCell = 1.0;
constexpr double kHoleRadius = 0.25 * kCell;
constexpr double kThickness = 0.25 * kCell;

class PlateBuilder {
 public:
  PlateBuilder(int g, int m) : g_(g), m_(m), radial_(std::max(1, m / 2)), layers_(std::max(1, m / 4)) {}

  TriangleMesh build() {
    std::vector<std::vector<int>> top_rims, bottom_rims;
    for (int k = 0; k < g_; ++k) {
      top_rims.push_back(cell_surface(k, true));
      bottom_rims.push_back(cell_surface(k, false));
    }
    outer_wall();
    for (int k = 0; k < g_; ++k) hole_wall(top_rims[k], bottom_rims[k]);
    return TriangleMesh::build(std::move(vertices_), std::move(faces_));
  }

 private:
  using LatticeKey = std::pair<int, int>;

  int add_vertex(const Vec3& p) {
    vertices_.push_back(p);
    return static_cast<int>(vertices_.size()) - 1;
  }

  int lattice_vertex(int i, int j, bool top) {
    auto& table = top ? top_lattice_ : bottom_lattice_;
    auto [it, inserted] = table.try_emplace({i, j}, -1);
    if (inserted) it->second = add_vertex(Vec3(i * kCell / m_, j * kCell / m_, top ? kThickness : 0.0));
    return it->second;
  }

  // Lattice coordinates of the a-th perimeter point of cell k, counterclockwise
  // from the cell's lower-left corner.
  LatticeKey perimeter_point(int k, int a) const {
    const int i0 = k * m_;
    const int side = a / m_, t = a % m_;
    switch (side) {
      case 0: return {i0 + t, 0};
      case 1: return {i0 + m_, t};
      case 2: return {i0 + m_ - t, m_};
      default: return {i0, m_ - t};
    }
  }

  double corner_angle(int apex, int a, int b) const {
    const Vec3 u = vertices_[a] - vertices_[apex], v = vertices_[b] - vertices_[apex];
    return std::atan2(u.cross(v).norm(), u.dot(v));
  }

  // Splits along the diagonal that satisfies the Delaunay angle condition.
  void add_quad(int v00, int v10, int v11, int v01) {
    if (corner_angle(v10, v11, v00) + corner_angle(v01, v00, v11) <= std::numbers::pi) {
      faces_.push_back({v00, v10, v11});
      faces_.push_back({v00, v11, v01});
    } else {
      faces_.push_back({v00, v10, v01});
      faces_.push_back({v10, v11, v01});
    }
  }

  // Top or bottom annulus of cell k; returns the hole-rim ring.
  std::vector<int> cell_surface(int k, bool top) {
    const int n = 4 * m_;
    const double z = top ? kThickness : 0.0;
    const Vec3 centre((k + 0.5) * kCell, 0.5 * kCell, z);
    // ring[a][r], r = 0 on the hole rim, r = radial_ on the cell boundary
    std::vector<std::vector<int>> ring(n, std::vector<int>(radial_ + 1));
    for (int a = 0; a < n; ++a) {
      const auto [i, j] = perimeter_point(k, a);
      const int outer = lattice_vertex(i, j, top);
      const Vec3 q = vertices_[outer];
      const Vec3 p = centre + kHoleRadius * (q - centre).normalized();
      for (int r = 0; r < radial_; ++r) ring[a][r] = add_vertex(p + (double(r) / radial_) * (q - p));
      ring[a][radial_] = outer;
    }
    for (int a = 0; a < n; ++a) {
      const int b = (a + 1) % n;
      for (int r = 0; r < radial_; ++r) {
        if (top)
          add_quad(ring[a][r], ring[a][r + 1], ring[b][r + 1], ring[b][r]);
        else
          add_quad(ring[a][r], ring[b][r], ring[b][r + 1], ring[a][r + 1]);
      }
    }
    std::vector<int> rim(n);
    for (int a = 0; a < n; ++a) rim[a] = ring[a][0];
    return rim;
  }

  // Vertical strip between matching bottom and top loops. `outward` picks the
  // winding for the plate's outer boundary versus a hole wall.
  void wall(const std::vector<int>& bottom, const std::vector<int>& top, bool outward) {
    const int n = static_cast<int>(bottom.size());
    std::vector<std::vector<int>> column(n, std::vector<int>(layers_ + 1));
    for (int a = 0; a < n; ++a) {
      column[a][0] = bottom[a];
      column[a][layers_] = top[a];
      const Vec3 lo = vertices_[bottom[a]], hi = vertices_[top[a]];
      for (int l = 1; l < layers_; ++l) column[a][l] = add_vertex(lo + (double(l) / layers_) * (hi - lo));
    }
    for (int a = 0; a < n; ++a) {
      const int b = (a + 1) % n;
      for (int l = 0; l < layers_; ++l) {
        if (outward)
          add_quad(column[a][l], column[b][l], column[b][l + 1], column[a][l + 1]);
        else
          add_quad(column[a][l], column[a][l + 1], column[b][l + 1], column[b][l]);
      }
    }
  }

  void outer_wall() {
    const int w = g_ * m_, h = m_;
    std::vector<LatticeKey> loop;
    for (int i = 0; i < w; ++i) loop.emplace_back(i, 0);
    for (int j = 0; j < h; ++j) loop.emplace_back(w, j);
    for (int i = w; i > 0; --i) loop.emplace_back(i, h);
    for (int j = h; j > 0; --j) loop.emplace_back(0, j);
    std::vector<int> bottom, top;
    for (const auto& [i, j] : loop) {
      bottom.push_back(lattice_vertex(i, j, false));
      top.push_back(lattice_vertex(i, j, true));
    }
    wall(bottom, top, true);
  }

  void hole_wall(const std::vector<int>& top_rim, const std::vector<int>& bottom_rim) {
    wall(bottom_rim, top_rim, false);
  }

  int g_, m_, radial_, layers_;
  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::map<LatticeKey, int> top_lattice_, bottom_lattice_;
};

}  // namespace

TriangleMesh generate_genus_g(int g, int resolution) {
  if (g < 1) throw PreconditionError("genus must be >= 1, got " + std::to_string(g));
  if (resolution < 2) throw PreconditionError("resolution must be >= 2, got " + std::to_string(resolution));
  return PlateBuilder(g, resolution).build();
}

}  // namespace prescurv
