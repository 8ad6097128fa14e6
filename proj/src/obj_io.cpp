#include "prescurv/obj_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "prescurv/errors.hpp"

namespace prescurv {

namespace {

std::string line_tag(int line_no) { return "line " + std::to_string(line_no) + ": "; }

double parse_real(const std::string& token, int line_no) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line_tag(line_no) + "malformed number '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line_tag(line_no) + "malformed number '" + token + "'");
  return value;
}

long parse_index(const std::string& token, int line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line_tag(line_no) + "malformed face index '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line_tag(line_no) + "malformed face index '" + token + "'");
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

ObjContents parse_obj(const std::string& text) {
  std::vector<Vec3> vertices;
  std::vector<std::array<long, 3>> raw_faces;
  std::vector<int> face_lines;
  std::vector<std::pair<long, double>> scalars;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "#") {
      std::string kind;
      if (ls >> kind && kind == "vs") {
        std::string idx, val, extra;
        if (!(ls >> idx >> val) || (ls >> extra))
          throw ParseError(line_tag(line_no) + "malformed '# vs' record");
        scalars.emplace_back(parse_index(idx, line_no), parse_real(val, line_no));
      }
      continue;
    }
    if (tag[0] == '#') continue;
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tag == "v") {
      if (tokens.size() != 3) throw ParseError(line_tag(line_no) + "vertex record needs exactly 3 coordinates");
      vertices.emplace_back(parse_real(tokens[0], line_no), parse_real(tokens[1], line_no),
                            parse_real(tokens[2], line_no));
    } else if (tag == "f") {
      if (tokens.size() != 3)
        throw ParseError(line_tag(line_no) + "face " + std::to_string(raw_faces.size()) + " is not a triangle");
      // Range is checked once all vertices are known.
      // `i/t/n` forms keep only the position index.
      std::array<long, 3> idx{};
      for (int k = 0; k < 3; ++k) idx[k] = parse_index(tokens[k].substr(0, tokens[k].find('/')), line_no);
      raw_faces.push_back(idx);
      face_lines.push_back(line_no);
    } else if (tag == "vt" || tag == "vn" || tag == "o" || tag == "g" || tag == "s" || tag == "usemtl" || tag == "mtllib") {
      continue;
    } else {
      throw ParseError(line_tag(line_no) + "unsupported record '" + tag + "'");
    }
  }

  const int nv = static_cast<int>(vertices.size());
  std::vector<Face> faces;
  faces.reserve(raw_faces.size());
  for (std::size_t f = 0; f < raw_faces.size(); ++f) {
    Face face{};
    for (int k = 0; k < 3; ++k) {
      const long idx = raw_faces[f][k];
      if (idx < 1 || idx > nv)
        throw ParseError(line_tag(face_lines[f]) + "face " + std::to_string(f) + " references vertex index " +
                         std::to_string(idx) + " outside 1.." + std::to_string(nv));
      face[k] = static_cast<int>(idx - 1);
    }
    faces.push_back(face);
  }

  ObjContents out{TriangleMesh::build(std::move(vertices), std::move(faces)), std::nullopt};
  if (!scalars.empty()) {
    std::vector<double> field(nv, 0.0);
    std::vector<char> seen(nv, 0);
    for (const auto& [idx, value] : scalars) {
      if (idx < 0 || idx >= nv) throw ParseError("'# vs' record for vertex " + std::to_string(idx) + " out of range");
      field[idx] = value;
      seen[idx] = 1;
    }
    for (int v = 0; v < nv; ++v)
      if (!seen[v]) throw ParseError("'# vs' records missing vertex " + std::to_string(v));
    out.scalar = std::move(field);
  }
  return out;
}

ObjContents load_obj_with_scalar(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_obj(buf.str());
}

TriangleMesh load_obj(const std::filesystem::path& path) { return load_obj_with_scalar(path).mesh; }

std::string format_obj(const TriangleMesh& mesh, std::optional<std::span<const double>> scalar) {
  if (scalar && static_cast<int>(scalar->size()) != mesh.num_vertices())
    throw PreconditionError("scalar field has " + std::to_string(scalar->size()) + " entries, mesh has " +
                            std::to_string(mesh.num_vertices()) + " vertices");
  std::string out;
  out += "# V " + std::to_string(mesh.num_vertices()) + " F " + std::to_string(mesh.num_faces()) + "\n";
  for (const Vec3& p : mesh.vertices())
    out += "v " + format_double(p.x()) + " " + format_double(p.y()) + " " + format_double(p.z()) + "\n";
  if (scalar)
    for (std::size_t i = 0; i < scalar->size(); ++i)
      out += "# vs " + std::to_string(i) + " " + format_double((*scalar)[i]) + "\n";
  for (const Face& f : mesh.faces())
    out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " + std::to_string(f[2] + 1) + "\n";
  return out;
}

void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path,
              std::optional<std::span<const double>> scalar) {
  const std::string text = format_obj(mesh, scalar);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace prescurv
