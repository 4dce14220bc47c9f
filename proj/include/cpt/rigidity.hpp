#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cpt/apartment.hpp"
#include "cpt/spectral.hpp"

namespace cpt {

enum class Relation { commute, orthogonal };

/// A bijection of a finite set of operators from one conjugacy class:
/// domain[s] is sent to domain[mapping[s]].
class FiniteTransformation {
 public:
  /// Throws InvalidArgument unless `mapping` is a permutation of the domain
  /// indices, the operators are pairwise distinct and share one class.
  FiniteTransformation(std::vector<SpectralOperator> domain, std::vector<std::size_t> mapping);
  static FiniteTransformation identity(std::vector<SpectralOperator> domain);
  /// Builds the mapping s -> index of images[s] in the domain.
  static FiniteTransformation from_images(std::vector<SpectralOperator> domain,
                                          std::span<const SpectralOperator> images);

  std::size_t size() const { return domain_.size(); }
  const std::vector<SpectralOperator>& domain() const { return domain_; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }
  const SpectralOperator& source(std::size_t s) const { return domain_.at(s); }
  const SpectralOperator& target(std::size_t s) const { return domain_.at(mapping_.at(s)); }

 private:
  std::vector<SpectralOperator> domain_;
  std::vector<std::size_t> mapping_;
};

/// Members of the apartment of a.descriptor() spanned by refine_to_frame of
/// the eigenspaces of `a` and `b`, with `a` and `b` themselves removed.
std::vector<SpectralOperator> default_bystanders(const SpectralOperator& a, const SpectralOperator& b);

/// Two distinct members A != B with image X (two labelings of one orthogonal
/// basis of X) swapped, everything else fixed. Domain order: A, B, bystanders.
/// Throws ProjectionClass for single-eigenvalue classes, InvalidArgument if
/// dim X != k.
FiniteTransformation example_orth_swap(const ClassDescriptor& cls, const Subspace& x,
                                       std::optional<std::vector<SpectralOperator>> bystanders = std::nullopt);

/// A = alpha P_X + beta P_Y swapped with B = alpha P_Y + beta P_X, for
/// orthogonal X, Y of dimension m_dim. Domain order: A, B, bystanders.
FiniteTransformation example_comm_swap(const Rational& alpha, const Rational& beta, std::size_t m_dim,
                                       const Subspace& x, const Subspace& y,
                                       std::optional<std::vector<SpectralOperator>> bystanders = std::nullopt);

/// The relation holds for (A, B) exactly when it holds for (f(A), f(B)), over all domain pairs.
bool check_preservation(const FiniteTransformation& t, Relation relation);
bool check_preservation_serial(const FiniteTransformation& t, Relation relation);

struct TraceWitness {
  std::size_t s;
  std::size_t t;
  Rational lhs;  // tr(A_s A_t)
  Rational rhs;  // tr(f(A_s) f(A_t))
};

/// First pair s < t (lexicographic) with tr(A_s A_t) != tr(f(A_s) f(A_t)).
/// A witness rules out f(C) = UCU* for every unitary or anti-unitary U.
std::optional<TraceWitness> gram_obstruction(const FiniteTransformation& t);

/// For domains inside the apartment of `frame`: a permutation pi of the frame
/// lines with f(A) = U A U* for every domain member, where U sends line i to
/// line pi[i]. nullopt when no line permutation induces f. Throws
/// MembershipError if a domain operator is not in the apartment.
std::optional<std::vector<std::size_t>> find_inducing_frame_permutation(const FiniteTransformation& t,
                                                                         const Frame& frame);

/// B in the class of `a` with AB = BA and Im A ∩ Im B = Y, for a line Y inside
/// a maximal eigenspace of A. Im B is Y plus k-1 lines of Im(A)^perp; Y goes
/// to the slot of smallest dimension (first on ties).
/// Throws NotAnEigenline, or NoRoom when n < 2k - 1.
SpectralOperator witness_commuting_operator(const SpectralOperator& a, const Subspace& y);

}  // namespace cpt
