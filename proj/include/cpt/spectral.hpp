#pragma once

#include <cstddef>
#include <vector>

#include "cpt/subspace.hpp"

namespace cpt {

/// A unitary conjugacy class of finite-rank self-adjoint operators on C^n:
/// distinct nonzero eigenvalues `alphas` whose eigenspaces have dimensions `dims`.
class ClassDescriptor {
 public:
  ClassDescriptor() = default;
  /// Throws InvalidArgument when alphas repeat or vanish, a dim is zero,
  /// the lists differ in length, or sum(dims) > n.
  ClassDescriptor(std::size_t n, std::vector<Rational> alphas, std::vector<std::size_t> dims);

  std::size_t n() const { return n_; }
  const std::vector<Rational>& alphas() const { return alphas_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t slots() const { return dims_.size(); }
  /// Rank k of every member.
  std::size_t rank() const { return rank_; }
  /// True iff all eigenspace dimensions are pairwise distinct. Informational only.
  bool distinct_dims() const;
  /// One eigenvalue: the class is a scaled copy of the rank-k projections.
  bool is_projection_class() const { return dims_.size() == 1; }

  friend bool operator==(const ClassDescriptor&, const ClassDescriptor&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> alphas_;
  std::vector<std::size_t> dims_;
  std::size_t rank_ = 0;
};

/// An operator A = sum_t alphas[t] P_{X_t} held in spectral form. Eigenspace t
/// belongs to eigenvalue slot t of the class; the kernel is never stored.
class SpectralOperator {
 public:
  /// Validates dims and mutual orthogonality of the eigenspaces.
  SpectralOperator(ClassDescriptor cls, std::vector<Subspace> eigenspaces);

  const ClassDescriptor& descriptor() const { return class_; }
  std::size_t ambient_dim() const { return class_.n(); }
  const std::vector<Subspace>& eigenspaces() const { return eigenspaces_; }
  const Subspace& eigenspace(std::size_t slot) const { return eigenspaces_.at(slot); }
  const Rational& eigenvalue(std::size_t slot) const { return class_.alphas().at(slot); }
  const Subspace& image() const { return image_; }

  friend bool operator==(const SpectralOperator& a, const SpectralOperator& b) {
    return a.class_ == b.class_ && a.eigenspaces_ == b.eigenspaces_;
  }

 private:
  ClassDescriptor class_;
  std::vector<Subspace> eigenspaces_;
  Subspace image_;
};

Matrix materialize(const SpectralOperator& a);
/// Every eigenspace of A is compatible with every eigenspace of B.
bool commutes(const SpectralOperator& a, const SpectralOperator& b);
/// Images orthogonal, i.e. AB = BA = 0.
bool orthogonal(const SpectralOperator& a, const SpectralOperator& b);
/// tr(AB) computed from the eigenspace projections.
Rational hs_inner(const SpectralOperator& a, const SpectralOperator& b);
Subspace image_of(const SpectralOperator& a);
/// V A V^{-1} for unitary V, applied eigenspace by eigenspace.
SpectralOperator conjugated(const SpectralOperator& a, const Matrix& v);

}  // namespace cpt
