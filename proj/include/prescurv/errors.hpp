#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prescurv {

/// Malformed input text (OBJ records, expressions, CSV rows).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mesh connectivity violates the closed oriented manifold contract.
class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degenerate geometry (zero-area faces, failed triangle inequality).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (length mismatch, bad argument).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Target curvature is not strictly negative at the listed vertices.
class NegativityViolation : public std::runtime_error {
 public:
  NegativityViolation(std::string what, std::vector<int> vertices)
      : std::runtime_error(std::move(what)), vertices_(std::move(vertices)) {}
  const std::vector<int>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<int> vertices_;
};

/// Expression evaluation produced a non-finite value at a vertex.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(std::string what, int vertex)
      : std::runtime_error(std::move(what)), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// sigma left the range where exp(sigma) is representable.
class RangeError : public std::runtime_error {
 public:
  RangeError(std::string what, int vertex)
      : std::runtime_error(std::move(what)), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// Linear algebra failure inside a solver (indefinite system, inaccurate solve).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace prescurv
