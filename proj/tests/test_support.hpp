#pragma once

#include <initializer_list>
#include <vector>

#include "cpt/apartment.hpp"
#include "cpt/matrix.hpp"
#include "cpt/subspace.hpp"

namespace cpt::test {

inline Vector vec(std::initializer_list<long> entries) {
  Vector v;
  for (long x : entries) v.emplace_back(x);
  return v;
}

inline Vector e(std::size_t n, std::size_t one_based) { return unit_vector(n, one_based - 1); }

inline Subspace span(std::size_t n, std::vector<Vector> vectors) { return projection_of(n, vectors); }

inline Matrix rows(std::initializer_list<std::initializer_list<const char*>> entries) {
  std::vector<Vector> out;
  for (const auto& r : entries) {
    Vector v;
    for (const char* s : r) v.push_back(Scalar::parse(s));
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(out);
}

/// Labeling from 1-based slots, 0 = kernel.
inline Labeling labels(std::initializer_list<int> slots) {
  std::vector<int> raw;
  for (int s : slots) raw.push_back(s - 1);
  return Labeling(std::move(raw));
}

}  // namespace cpt::test
