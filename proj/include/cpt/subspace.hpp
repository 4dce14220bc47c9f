#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cpt/matrix.hpp"

namespace cpt {

/// A linear subspace of C^n, stored as its orthogonal projection matrix.
///
/// The projection is canonical: two Subspace values are equal iff they are the
/// same subspace. Every constructor leaves `projection()` idempotent and
/// self-adjoint; for rational spanning vectors the entries stay rational since
/// P = V (V*V)^-1 V* needs no square roots.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t n);
  static Subspace full(std::size_t n);
  /// Span of a single nonzero vector.
  static Subspace line(const Vector& direction);
  /// Adopts an existing matrix; throws InvalidArgument unless it is an
  /// orthogonal projection (P^2 = P = P*).
  static Subspace from_projection(Matrix proj);

  std::size_t ambient_dim() const { return proj_.rows(); }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  const Matrix& projection() const { return proj_; }

  /// Column basis of the projection (pivot columns, in column order).
  std::vector<Vector> basis() const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  bool orthogonal_to(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.proj_ == b.proj_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Matrix proj, std::size_t dim) : proj_(std::move(proj)), dim_(dim) {}
  friend Subspace projection_of(std::size_t n, std::span<const Vector> vectors);
  friend Subspace orthogonal_complement(const Subspace& x);

  Matrix proj_;
  std::size_t dim_ = 0;
};

/// Projection onto span(vectors) in C^n. Throws DimensionMismatch if some
/// vector does not have length n.
Subspace projection_of(std::size_t n, std::span<const Vector> vectors);
Subspace intersect(const Subspace& x, const Subspace& y);
/// Smallest subspace containing x and y.
Subspace sum(const Subspace& x, const Subspace& y);
Subspace sum(std::span<const Subspace> parts, std::size_t n);
/// X^perp ∩ Y.
Subspace complement_within(const Subspace& x, const Subspace& y);
Subspace orthogonal_complement(const Subspace& x);

/// Gram-Schmidt without normalization on the given vectors, dropping those
/// dependent on earlier ones; each output is scaled to lead with 1.
std::vector<Vector> gram_schmidt(std::vector<Vector> vectors);

/// Pairwise-orthogonal basis of `x` by Gram-Schmidt without normalization;
/// each vector is scaled so that its first nonzero entry is 1.
std::vector<Vector> orthogonal_basis(const Subspace& x);

/// Conjugates by a matrix V: the subspace V(X). Requires V unitary for the
/// result to describe the same geometry, but any invertible V gives a valid
/// subspace.
Subspace image_under(const Matrix& v, const Subspace& x);

}  // namespace cpt
