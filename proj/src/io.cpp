#include "cpt/io.hpp"

#include <fstream>
#include <string>

#include "cpt/error.hpp"

namespace cpt::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  throw ParseError("scalar must be a string like \"p/q\" or an integer");
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector must be a JSON array");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return Matrix::from_rows(rows);
}

json to_json(const ClassDescriptor& c) {
  json alphas = json::array();
  for (const auto& a : c.alphas()) alphas.push_back(rational_str(a));
  return {{"n", c.n()}, {"alphas", alphas}, {"dims", c.dims()}};
}

ClassDescriptor class_from_json(const json& j) {
  const std::size_t n = size_from_json(field(j, "n"), "n");
  std::vector<Rational> alphas;
  for (const auto& a : field(j, "alphas")) {
    const Scalar s = scalar_from_json(a);
    if (!s.is_real()) throw ParseError("eigenvalues must be real rationals");
    alphas.push_back(s.re());
  }
  std::vector<std::size_t> dims;
  for (const auto& d : field(j, "dims")) dims.push_back(size_from_json(d, "dims entry"));
  return {n, std::move(alphas), std::move(dims)};
}

json subspace_to_json(const Subspace& x) {
  json out = json::array();
  for (const auto& v : orthogonal_basis(x)) out.push_back(to_json(v));
  return out;
}

Subspace subspace_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("subspace must be an array of spanning vectors");
  std::vector<Vector> spanning;
  for (const auto& v : j) spanning.push_back(vector_from_json(v));
  return projection_of(n, spanning);
}

json to_json(const SpectralOperator& a) {
  json spaces = json::array();
  for (const auto& x : a.eigenspaces()) spaces.push_back(subspace_to_json(x));
  return {{"class", to_json(a.descriptor())}, {"eigenspaces", spaces}};
}

SpectralOperator operator_from_json(const json& j) {
  ClassDescriptor cls = class_from_json(field(j, "class"));
  std::vector<Subspace> spaces;
  for (const auto& x : field(j, "eigenspaces")) spaces.push_back(subspace_from_json(x, cls.n()));
  return {std::move(cls), std::move(spaces)};
}

FamilyFile family_from_json(const json& j) {
  FamilyFile out;
  const json* list = &j;
  if (j.is_object()) {
    out.n = size_from_json(field(j, "n"), "n");
    list = &field(j, "family");
  }
  if (!list->is_array()) throw ParseError("family must be an array of spanning sets");
  if (out.n == 0) {
    for (const auto& x : *list) {
      if (x.is_array() && !x.empty() && x.front().is_array()) {
        out.n = x.front().size();
        break;
      }
    }
  }
  if (out.n == 0) throw ParseError("family: cannot infer n from an empty family; use {\"n\": ..., \"family\": [...]}");
  for (const auto& x : *list) out.family.push_back(subspace_from_json(x, out.n));
  return out;
}

json to_json(const Frame& f) {
  json lines = json::array();
  for (const auto& d : f.directions()) lines.push_back(to_json(d));
  return {{"n", f.size()}, {"lines", lines}};
}

Frame frame_from_json(const json& j) {
  std::vector<Vector> dirs;
  for (const auto& v : field(j, "lines")) dirs.push_back(vector_from_json(v));
  if (j.contains("n") && size_from_json(j.at("n"), "n") != dirs.size()) {
    throw ParseError("frame: n disagrees with the number of lines");
  }
  return Frame::from_directions(std::move(dirs));
}

json to_json(const Labeling& a) {
  json out = json::array();
  for (int s : a.slots()) out.push_back(s == Labeling::kKernel ? 0 : s + 1);
  return out;
}

Labeling labeling_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("labeling must be an array of slots");
  std::vector<int> slots;
  for (const auto& s : j) {
    if (!s.is_number_integer() || s.get<int>() < 0) throw ParseError("labeling slots are integers >= 0");
    slots.push_back(s.get<int>() - 1);
  }
  return Labeling(std::move(slots));
}

MemberSetFile member_set_from_json(const json& j) {
  MemberSetFile out{class_from_json(field(j, "class")), std::nullopt, {}};
  if (j.contains("frame")) out.frame = frame_from_json(j.at("frame"));
  for (const auto& m : field(j, "members")) out.members.push_back(labeling_from_json(m));
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace cpt::io
