#include "prescurv/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "prescurv/errors.hpp"

namespace prescurv {

void require_length(const BackgroundGeometry& geom, const Field& f, const char* what) {
  if (f.size() != geom.num_vertices)
    throw PreconditionError(std::string(what) + " has length " + std::to_string(f.size()) + ", expected " +
                            std::to_string(geom.num_vertices));
}

BackgroundGeometry build_geometry(const TriangleMesh& mesh) {
  const int nv = mesh.num_vertices();
  const int ne = mesh.num_edges();
  const int nf = mesh.num_faces();
  const auto& pos = mesh.vertices();

  BackgroundGeometry geom;
  geom.num_vertices = nv;
  geom.chi = euler_characteristic(mesh);
  geom.faces = mesh.faces();

  geom.edge_lengths.resize(ne);
  for (int e = 0; e < ne; ++e) geom.edge_lengths[e] = (pos[mesh.edges()[e][0]] - pos[mesh.edges()[e][1]]).norm();

  geom.cot_weights = Field::Zero(ne);
  geom.angle_defects = Field::Constant(nv, 2.0 * std::numbers::pi);
  Field raw_face_areas(nf);
  Field raw_vertex_areas = Field::Zero(nv);
  geom.corner_angles.resize(nf);
  geom.hat_gradients.resize(nf);
  geom.min_angle = std::numbers::pi;
  int obtuse = 0;

  for (int f = 0; f < nf; ++f) {
    const Face& t = mesh.faces()[f];
    const auto& fe = mesh.face_edges()[f];
    const double l0 = geom.edge_lengths[fe[0]], l1 = geom.edge_lengths[fe[1]], l2 = geom.edge_lengths[fe[2]];
    if (!(l0 < l1 + l2 && l1 < l0 + l2 && l2 < l0 + l1))
      throw GeometryError("face " + std::to_string(f) + " violates the strict triangle inequality");

    const Vec3 normal = (pos[t[1]] - pos[t[0]]).cross(pos[t[2]] - pos[t[0]]);
    const double twice_area = normal.norm();
    if (!(twice_area > 0.0)) throw GeometryError("face " + std::to_string(f) + " has zero area");
    raw_face_areas[f] = 0.5 * twice_area;
    const Vec3 unit_normal = normal / twice_area;

    bool is_obtuse = false;
    bool is_wide = false;
    for (int k = 0; k < 3; ++k) {
      const Vec3 u = pos[t[(k + 1) % 3]] - pos[t[k]];
      const Vec3 v = pos[t[(k + 2) % 3]] - pos[t[k]];
      const double cross = u.cross(v).norm();
      const double dot = u.dot(v);
      const double angle = std::atan2(cross, dot);
      geom.corner_angles[f][k] = angle;
      geom.angle_defects[t[k]] -= angle;
      geom.cot_weights[fe[k]] += 0.5 * dot / cross;
      geom.min_angle = std::min(geom.min_angle, angle);
      is_obtuse |= angle > 0.5 * std::numbers::pi;
      is_wide |= angle >= std::numbers::pi - 1e-9;
      raw_vertex_areas[t[k]] += raw_face_areas[f] / 3.0;
      // hat function of corner k rises across the opposite edge
      const Vec3 opposite = pos[t[(k + 2) % 3]] - pos[t[(k + 1) % 3]];
      geom.hat_gradients[f][k] = unit_normal.cross(opposite) / twice_area;
    }
    obtuse += is_obtuse;
    if (is_wide) geom.wide_angle_faces.push_back(f);
  }
  geom.obtuse_fraction = double(obtuse) / nf;

  geom.total_area_raw = raw_face_areas.sum();
  const double scale = 1.0 / geom.total_area_raw;
  geom.face_areas = raw_face_areas * scale;
  geom.vertex_areas = raw_vertex_areas * scale;
  geom.K0 = geom.angle_defects.cwiseQuotient(geom.vertex_areas);
  // gradients grow by 1/sqrt(scale) when lengths shrink by sqrt(scale)
  const double grad_scale = std::sqrt(geom.total_area_raw);
  for (auto& grads : geom.hat_gradients)
    for (Vec3& gvec : grads) gvec *= grad_scale;
  geom.metric_scale = Field::Ones(nv);

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(4 * ne);
  for (int e = 0; e < ne; ++e) {
    const int i = mesh.edges()[e][0], j = mesh.edges()[e][1];
    const double w = geom.cot_weights[e];
    triplets.emplace_back(i, j, -w);
    triplets.emplace_back(j, i, -w);
    triplets.emplace_back(i, i, w);
    triplets.emplace_back(j, j, w);
  }
  geom.stiffness.resize(nv, nv);
  geom.stiffness.setFromTriplets(triplets.begin(), triplets.end());
  geom.stiffness.makeCompressed();
  return geom;
}

BackgroundGeometry conformally_rescaled(const BackgroundGeometry& geom, const Field& sigma0) {
  require_length(geom, sigma0, "sigma0");
  BackgroundGeometry out = geom;
  const Field factor = sigma0.array().exp().matrix();
  const Field lap = laplacian_apply(geom, sigma0);
  out.K0 = (geom.K0 - 0.5 * lap).cwiseQuotient(factor);
  out.vertex_areas = geom.vertex_areas.cwiseProduct(factor);
  out.metric_scale = geom.metric_scale.cwiseProduct(factor);
  return out;
}

Field laplacian_apply(const BackgroundGeometry& geom, const Field& f) {
  require_length(geom, f, "field");
  return -(geom.stiffness * f).cwiseQuotient(geom.vertex_areas);
}

namespace {

// Difference form, so constant fields give an exactly zero gradient.
Vec3 face_gradient(const Field& f, const Face& t, const std::array<Vec3, 3>& hat) {
  return (f[t[1]] - f[t[0]]) * hat[1] + (f[t[2]] - f[t[0]]) * hat[2];
}

}  // namespace

std::vector<Vec3> vertex_gradients(const BackgroundGeometry& geom, const Field& f) {
  require_length(geom, f, "field");
  std::vector<Vec3> sum(geom.num_vertices, Vec3::Zero());
  Field weight = Field::Zero(geom.num_vertices);
  for (std::size_t fi = 0; fi < geom.faces.size(); ++fi) {
    const Face& t = geom.faces[fi];
    const auto& hat = geom.hat_gradients[fi];
    const Vec3 grad = face_gradient(f, t, hat);
    const double w = geom.face_areas[fi] / 3.0;
    for (int v : t) {
      sum[v] += w * grad;
      weight[v] += w;
    }
  }
  for (int v = 0; v < geom.num_vertices; ++v) sum[v] /= weight[v] * std::sqrt(geom.metric_scale[v]);
  return sum;
}

Field dirichlet_gradient_density(const BackgroundGeometry& geom, const Field& f) {
  require_length(geom, f, "field");
  Field sum = Field::Zero(geom.num_vertices);
  Field weight = Field::Zero(geom.num_vertices);
  for (std::size_t fi = 0; fi < geom.faces.size(); ++fi) {
    const Face& t = geom.faces[fi];
    const auto& hat = geom.hat_gradients[fi];
    const Vec3 grad = face_gradient(f, t, hat);
    const double w = geom.face_areas[fi] / 3.0;
    for (int v : t) {
      sum[v] += w * grad.squaredNorm();
      weight[v] += w;
    }
  }
  // |grad|^2 in e^{sigma0} h is e^{-sigma0} times its value in h
  return 0.25 * sum.cwiseQuotient(weight).cwiseQuotient(geom.metric_scale);
}

}  // namespace prescurv
