#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cpt/apartment.hpp"
#include "cpt/compatibility.hpp"
#include "cpt/spectral.hpp"

namespace cpt {

/// Seeded generators for randomized checks. Draws use `rng() % range` so a
/// seed reproduces the same objects on every platform.
using Rng = std::mt19937_64;

/// Frame from Gram-Schmidt on random small Gaussian-integer vectors.
/// With `complex_entries` false all entries are rational.
Frame random_frame(std::size_t n, Rng& rng, bool complex_entries = true);
Labeling random_member(const Apartment& ap, Rng& rng);
SpectralOperator random_operator(const ClassDescriptor& cls, Rng& rng, bool complex_entries = true);

struct CompatibleFamily {
  Frame generator;
  std::vector<Subspace> family;
  std::vector<std::vector<std::size_t>> line_sets;  // generator lines spanning each member
};

/// `count` subspaces, each spanned by a random nonempty subset of the lines of
/// a random frame (given through random combinations, not the lines themselves).
CompatibleFamily random_compatible_family(std::size_t n, std::size_t count, Rng& rng);

/// Matrix of e_i -> signs[i] * e_{perm[i]}.
Matrix signed_permutation_matrix(const std::vector<std::size_t>& perm, const std::vector<int>& signs);

/// Partitions of k into positive parts, each listed in nondecreasing order.
std::vector<std::vector<std::size_t>> integer_partitions(std::size_t k);
/// Class with eigenvalues 1, 2, ..., m for the given dims.
ClassDescriptor class_with_dims(std::size_t n, const std::vector<std::size_t>& dims);

}  // namespace cpt
