#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace prescurv {

using Vec3 = Eigen::Vector3d;
using Face = std::array<int, 3>;
using Edge = std::array<int, 2>;

// Closed, consistently oriented, manifold triangle mesh. Instances can only be
// obtained through TriangleMesh::build, which validates every invariant, so a
// TriangleMesh value is always well formed and immutable afterwards.
class TriangleMesh {
 public:
  /// Validates and indexes the mesh. Throws PreconditionError on bad indices,
  /// TopologyError on boundary / non-manifold / orientation defects and
  /// GeometryError on degenerate faces. Messages name the offending element.
  static TriangleMesh build(std::vector<Vec3> vertices, std::vector<Face> faces);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  /// Unordered vertex pairs stored as (min, max), sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  /// face_edges()[f][k] is the edge opposite corner k of face f.
  const std::vector<std::array<int, 3>>& face_edges() const { return face_edges_; }
  /// The two faces incident to each edge.
  const std::vector<std::array<int, 2>>& edge_faces() const { return edge_faces_; }

  /// Index of edge {i, j}, or -1.
  int find_edge(int i, int j) const;

  bool is_connected() const;
  double surface_area() const;

 private:
  TriangleMesh() = default;

  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> face_edges_;
  std::vector<std::array<int, 2>> edge_faces_;
  // CSR vertex -> incident edge ids, used by find_edge.
  std::vector<int> vertex_edge_offsets_;
  std::vector<int> vertex_edge_ids_;
};

/// V - E + F. Always even for a valid mesh.
int euler_characteristic(const TriangleMesh& mesh);

/// (2 - chi) / 2. Throws TopologyError for disconnected meshes.
int genus(const TriangleMesh& mesh);

/// 1-to-4 midpoint subdivision. New vertex V + e sits at the midpoint of edge e.
TriangleMesh refine(const TriangleMesh& mesh);

/// Uniformly rescales positions so the surface area becomes `area`.
TriangleMesh scaled_to_area(const TriangleMesh& mesh, double area);

}  // namespace prescurv
