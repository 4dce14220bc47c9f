#pragma once

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <vector>

#include "cpt/apartment.hpp"
#include "cpt/compatibility.hpp"
#include "cpt/spectral.hpp"

// JSON formats shared by the CLI and its tests. Scalars travel as strings in
// "p/q" / "p/q+r/s i" form; integers are also accepted on input. Frame
// indices and eigenvalue slots are 1-based on the wire, 0 meaning kernel.
namespace cpt::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json to_json(const Vector& v);
Vector vector_from_json(const json& j);
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"n": int, "alphas": ["scalar", ...], "dims": [int, ...]}
json to_json(const ClassDescriptor& c);
ClassDescriptor class_from_json(const json& j);

/// {"class": {...}, "eigenspaces": [[vector, ...], ...]} (spanning vectors per slot)
json to_json(const SpectralOperator& a);
SpectralOperator operator_from_json(const json& j);

/// Spanning vectors of a subspace: [vector, ...]
json subspace_to_json(const Subspace& x);
Subspace subspace_from_json(const json& j, std::size_t n);

struct FamilyFile {
  std::size_t n = 0;
  std::vector<Subspace> family;
};
/// Either [[vector, ...], ...] or {"n": int, "family": [[vector, ...], ...]}.
/// n is taken from the vectors when not given.
FamilyFile family_from_json(const json& j);

/// {"n": int, "lines": [vector, ...]}
json to_json(const Frame& f);
Frame frame_from_json(const json& j);

/// [slot per line], 1-based slots, 0 = kernel.
json to_json(const Labeling& a);
Labeling labeling_from_json(const json& j);

struct MemberSetFile {
  ClassDescriptor cls;
  std::optional<Frame> frame;
  std::vector<Labeling> members;
};
/// {"class": {...}, "frame"?: {...}, "members": [[...], ...]}
MemberSetFile member_set_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace cpt::io
