#include "prescurv/curvature_field.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "prescurv/errors.hpp"

namespace prescurv {

namespace {

void check_negative(const Field& K) {
  std::vector<int> bad;
  for (int i = 0; i < K.size(); ++i)
    if (!(K[i] < 0.0)) bad.push_back(i);
  if (bad.empty()) return;
  std::string msg = "hypothesis K<0 violated: target curvature is not strictly negative at " +
                    std::to_string(bad.size()) + " vertices (";
  for (std::size_t k = 0; k < bad.size() && k < 10; ++k) msg += (k ? ", " : "") + std::to_string(bad[k]);
  if (bad.size() > 10) msg += ", ...";
  msg += ")";
  throw NegativityViolation(msg, std::move(bad));
}

}  // namespace

TargetCurvature target_from_values(const Field& K, const BackgroundGeometry& geom) {
  require_length(geom, K, "target curvature");
  check_negative(K);
  TargetCurvature t{K, Field(K.size())};
  const std::vector<Vec3> grads = vertex_gradients(geom, K);
  for (int i = 0; i < K.size(); ++i) t.grad_ratio[i] = 0.5 * grads[i].norm() / std::abs(K[i]);
  return t;
}

TargetCurvature evaluate_on_mesh(const Expression& expr, const TriangleMesh& mesh, const BackgroundGeometry& geom) {
  if (mesh.num_vertices() != geom.num_vertices) throw PreconditionError("mesh and geometry disagree on vertex count");
  Field K(mesh.num_vertices());
  for (int i = 0; i < mesh.num_vertices(); ++i) {
    const Vec3& p = mesh.vertices()[i];
    try {
      K[i] = expr.evaluate(p.x(), p.y(), p.z());
    } catch (const std::domain_error& e) {
      throw EvaluationError("cannot evaluate target curvature at vertex " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return target_from_values(K, geom);
}

TargetCurvature constant_curvature(double value, int num_vertices) {
  if (!(value < 0.0)) throw PreconditionError("hypothesis K<0 violated: constant curvature must be negative");
  if (num_vertices <= 0) throw PreconditionError("vertex count must be positive");
  return {Field::Constant(num_vertices, value), Field::Zero(num_vertices)};
}

Field read_vertex_csv(const std::filesystem::path& path, int num_vertices) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  Field K(num_vertices);
  std::vector<char> seen(num_vertices, 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line_no == 1 && line.find("vertex_index") != std::string::npos) continue;
    std::istringstream ls(line);
    long idx = 0;
    char comma = 0;
    double value = 0.0;
    std::string rest;
    if (!(ls >> idx >> comma >> value) || comma != ',' || (ls >> rest))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'vertex_index,value'");
    if (idx < 0 || idx >= num_vertices)
      throw ParseError("line " + std::to_string(line_no) + ": vertex index " + std::to_string(idx) + " out of range");
    if (seen[idx]) throw ParseError("line " + std::to_string(line_no) + ": duplicate vertex " + std::to_string(idx));
    seen[idx] = 1;
    K[idx] = value;
  }
  for (int i = 0; i < num_vertices; ++i)
    if (!seen[i]) throw ParseError("CSV has no row for vertex " + std::to_string(i));
  return K;
}

Field read_curvature_csv(const std::filesystem::path& path, int num_vertices) {
  return read_vertex_csv(path, num_vertices);
}

}  // namespace prescurv
