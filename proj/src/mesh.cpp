#include "prescurv/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "prescurv/errors.hpp"

namespace prescurv {

namespace {

struct HalfEdgeRecord {
  int lo, hi;   // sorted endpoints
  bool forward; // true if the face traverses lo -> hi
  int face;
  int corner;   // corner opposite this edge
};

std::string edge_name(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Each vertex star must be a single closed fan; otherwise two cones are pinched
// together at the vertex and the surface is not a manifold there.
void check_vertex_fans(const std::vector<Face>& faces, int num_vertices) {
  std::vector<int> offsets(num_vertices + 1, 0);
  for (const Face& f : faces)
    for (int v : f) ++offsets[v + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  // (next, prev) around the vertex for every corner
  std::vector<std::array<int, 2>> links(offsets.back());
  std::vector<int> fill(offsets.begin(), offsets.end() - 1);
  for (const Face& f : faces)
    for (int k = 0; k < 3; ++k) links[fill[f[k]]++] = {f[(k + 1) % 3], f[(k + 2) % 3]};

  for (int v = 0; v < num_vertices; ++v) {
    const int begin = offsets[v];
    const int count = offsets[v + 1] - begin;
    if (count == 0) throw TopologyError("isolated vertex " + std::to_string(v) + " is not used by any face");
    auto find_next = [&](int next) {
      for (int c = begin; c < begin + count; ++c)
        if (links[c][0] == next) return c;
      return -1;
    };
    int steps = 0;
    int c = begin;
    do {
      c = find_next(links[c][1]);
      ++steps;
    } while (c != begin && c >= 0 && steps <= count);
    if (c != begin || steps != count)
      throw TopologyError("non-manifold vertex " + std::to_string(v) + ": incident faces do not form a single fan");
  }
}

}  // namespace

TriangleMesh TriangleMesh::build(std::vector<Vec3> vertices, std::vector<Face> faces) {
  const int nv = static_cast<int>(vertices.size());
  const int nf = static_cast<int>(faces.size());
  if (nf == 0) throw TopologyError("mesh has no faces");

  for (int f = 0; f < nf; ++f) {
    for (int v : faces[f])
      if (v < 0 || v >= nv)
        throw PreconditionError("face " + std::to_string(f) + " references vertex " + std::to_string(v) +
                                " outside [0, " + std::to_string(nv) + ")");
    const Face& t = faces[f];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw TopologyError("face " + std::to_string(f) + " repeats a vertex index");
  }
  for (int v = 0; v < nv; ++v)
    if (!vertices[v].allFinite()) throw GeometryError("vertex " + std::to_string(v) + " has a non-finite coordinate");

  {
    std::vector<std::pair<Face, int>> sorted_faces;
    sorted_faces.reserve(nf);
    for (int f = 0; f < nf; ++f) {
      Face s = faces[f];
      std::sort(s.begin(), s.end());
      sorted_faces.emplace_back(s, f);
    }
    std::sort(sorted_faces.begin(), sorted_faces.end());
    for (int i = 1; i < nf; ++i)
      if (sorted_faces[i].first == sorted_faces[i - 1].first)
        throw TopologyError("faces " + std::to_string(sorted_faces[i - 1].second) + " and " +
                            std::to_string(sorted_faces[i].second) + " share the same vertex set");
  }

  std::vector<HalfEdgeRecord> records;
  records.reserve(3 * nf);
  for (int f = 0; f < nf; ++f) {
    for (int k = 0; k < 3; ++k) {
      const int a = faces[f][(k + 1) % 3];
      const int b = faces[f][(k + 2) % 3];
      records.push_back({std::min(a, b), std::max(a, b), a < b, f, k});
    }
  }
  std::sort(records.begin(), records.end(), [](const HalfEdgeRecord& x, const HalfEdgeRecord& y) {
    return std::tie(x.lo, x.hi, x.face) < std::tie(y.lo, y.hi, y.face);
  });

  TriangleMesh mesh;
  mesh.face_edges_.assign(nf, {-1, -1, -1});
  for (std::size_t i = 0; i < records.size();) {
    std::size_t j = i;
    while (j < records.size() && records[j].lo == records[i].lo && records[j].hi == records[i].hi) ++j;
    const std::size_t count = j - i;
    const std::string name = edge_name(records[i].lo, records[i].hi);
    if (count == 1)
      throw TopologyError("boundary edge " + name + " of face " + std::to_string(records[i].face) +
                          " has only one incident face (open surface)");
    if (count > 2)
      throw TopologyError("non-manifold edge " + name + " has " + std::to_string(count) + " incident faces");
    const HalfEdgeRecord& r0 = records[i];
    const HalfEdgeRecord& r1 = records[i + 1];
    if (r0.forward == r1.forward)
      throw TopologyError("inconsistent orientation across edge " + name + " between faces " +
                          std::to_string(r0.face) + " and " + std::to_string(r1.face));
    const int e = static_cast<int>(mesh.edges_.size());
    mesh.edges_.push_back({r0.lo, r0.hi});
    mesh.edge_faces_.push_back(r0.forward ? std::array<int, 2>{r0.face, r1.face}
                                          : std::array<int, 2>{r1.face, r0.face});
    mesh.face_edges_[r0.face][r0.corner] = e;
    mesh.face_edges_[r1.face][r1.corner] = e;
    i = j;
  }

  check_vertex_fans(faces, nv);

  for (int f = 0; f < nf; ++f) {
    const Vec3& p0 = vertices[faces[f][0]];
    const Vec3& p1 = vertices[faces[f][1]];
    const Vec3& p2 = vertices[faces[f][2]];
    const double twice_area = (p1 - p0).cross(p2 - p0).norm();
    const double scale = std::max({(p1 - p0).squaredNorm(), (p2 - p1).squaredNorm(), (p0 - p2).squaredNorm()});
    if (!(twice_area > 1e-14 * scale))
      throw GeometryError("face " + std::to_string(f) + " is degenerate (zero area)");
  }

  mesh.vertex_edge_offsets_.assign(nv + 1, 0);
  for (const Edge& e : mesh.edges_) {
    ++mesh.vertex_edge_offsets_[e[0] + 1];
    ++mesh.vertex_edge_offsets_[e[1] + 1];
  }
  std::partial_sum(mesh.vertex_edge_offsets_.begin(), mesh.vertex_edge_offsets_.end(),
                   mesh.vertex_edge_offsets_.begin());
  mesh.vertex_edge_ids_.resize(mesh.vertex_edge_offsets_.back());
  std::vector<int> fill(mesh.vertex_edge_offsets_.begin(), mesh.vertex_edge_offsets_.end() - 1);
  for (int e = 0; e < static_cast<int>(mesh.edges_.size()); ++e) {
    mesh.vertex_edge_ids_[fill[mesh.edges_[e][0]]++] = e;
    mesh.vertex_edge_ids_[fill[mesh.edges_[e][1]]++] = e;
  }

  mesh.vertices_ = std::move(vertices);
  mesh.faces_ = std::move(faces);

  if (euler_characteristic(mesh) % 2 != 0)
    throw TopologyError("odd Euler characteristic " + std::to_string(euler_characteristic(mesh)));
  return mesh;
}

int TriangleMesh::find_edge(int i, int j) const {
  if (i < 0 || j < 0 || i >= num_vertices() || j >= num_vertices()) return -1;
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (int k = vertex_edge_offsets_[lo]; k < vertex_edge_offsets_[lo + 1]; ++k) {
    const Edge& e = edges_[vertex_edge_ids_[k]];
    if (e[0] == lo && e[1] == hi) return vertex_edge_ids_[k];
  }
  return -1;
}

bool TriangleMesh::is_connected() const {
  std::vector<char> seen(num_vertices(), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int k = vertex_edge_offsets_[v]; k < vertex_edge_offsets_[v + 1]; ++k) {
      const Edge& e = edges_[vertex_edge_ids_[k]];
      const int w = e[0] == v ? e[1] : e[0];
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        frontier.push(w);
      }
    }
  }
  return visited == num_vertices();
}

double TriangleMesh::surface_area() const {
  double total = 0.0;
  for (const Face& f : faces_)
    total += 0.5 * (vertices_[f[1]] - vertices_[f[0]]).cross(vertices_[f[2]] - vertices_[f[0]]).norm();
  return total;
}

int euler_characteristic(const TriangleMesh& mesh) {
  return mesh.num_vertices() - mesh.num_edges() + mesh.num_faces();
}

int genus(const TriangleMesh& mesh) {
  if (!mesh.is_connected()) throw TopologyError("genus is undefined for a disconnected mesh");
  const int chi = euler_characteristic(mesh);
  const int g = (2 - chi) / 2;
  if (g < 0) throw TopologyError("negative genus from Euler characteristic " + std::to_string(chi));
  return g;
}

TriangleMesh refine(const TriangleMesh& mesh) {
  const int nv = mesh.num_vertices();
  std::vector<Vec3> vertices = mesh.vertices();
  vertices.reserve(nv + mesh.num_edges());
  for (const Edge& e : mesh.edges()) vertices.push_back(0.5 * (mesh.vertices()[e[0]] + mesh.vertices()[e[1]]));

  std::vector<Face> faces;
  faces.reserve(4 * mesh.num_faces());
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const Face& t = mesh.faces()[f];
    const auto& fe = mesh.face_edges()[f];
    // midpoint opposite corner k
    const int m0 = nv + fe[0], m1 = nv + fe[1], m2 = nv + fe[2];
    faces.push_back({t[0], m2, m1});
    faces.push_back({t[1], m0, m2});
    faces.push_back({t[2], m1, m0});
    faces.push_back({m0, m1, m2});
  }
  return TriangleMesh::build(std::move(vertices), std::move(faces));
}

TriangleMesh scaled_to_area(const TriangleMesh& mesh, double area) {
  if (!(area > 0.0)) throw PreconditionError("target area must be positive");
  const double s = std::sqrt(area / mesh.surface_area());
  std::vector<Vec3> vertices = mesh.vertices();
  for (Vec3& p : vertices) p *= s;
  return TriangleMesh::build(std::move(vertices), mesh.faces());
}

}  // namespace prescurv
