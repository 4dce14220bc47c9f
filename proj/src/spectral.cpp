#include "cpt/spectral.hpp"

#include <set>
#include <string>

#include "cpt/compatibility.hpp"
#include "cpt/error.hpp"

namespace cpt {

ClassDescriptor::ClassDescriptor(std::size_t n, std::vector<Rational> alphas, std::vector<std::size_t> dims)
    : n_(n), alphas_(std::move(alphas)), dims_(std::move(dims)) {
  if (n_ == 0) throw InvalidArgument("class descriptor: ambient dimension must be at least 1");
  if (alphas_.size() != dims_.size()) throw InvalidArgument("class descriptor: alphas and dims differ in length");
  if (alphas_.empty()) throw InvalidArgument("class descriptor: at least one eigenvalue required");
  std::set<Rational> seen;
  for (auto& a : alphas_) {
    a.canonicalize();
    if (sgn(a) == 0) throw InvalidArgument("class descriptor: eigenvalue 0 is not allowed");
    if (!seen.insert(a).second) throw InvalidArgument("class descriptor: repeated eigenvalue " + a.get_str());
  }
  for (auto d : dims_) {
    if (d == 0) throw InvalidArgument("class descriptor: eigenspace dimension must be positive");
    rank_ += d;
  }
  if (rank_ > n_) {
    throw InvalidArgument("class descriptor: rank " + std::to_string(rank_) + " exceeds n = " + std::to_string(n_));
  }
}

bool ClassDescriptor::distinct_dims() const {
  return std::set<std::size_t>(dims_.begin(), dims_.end()).size() == dims_.size();
}

SpectralOperator::SpectralOperator(ClassDescriptor cls, std::vector<Subspace> eigenspaces)
    : class_(std::move(cls)), eigenspaces_(std::move(eigenspaces)) {
  if (eigenspaces_.size() != class_.slots()) {
    throw InvalidArgument("spectral operator: expected " + std::to_string(class_.slots()) + " eigenspaces");
  }
  for (std::size_t t = 0; t < eigenspaces_.size(); ++t) {
    if (eigenspaces_[t].ambient_dim() != class_.n()) throw DimensionMismatch("spectral operator: eigenspace ambient");
    if (eigenspaces_[t].dim() != class_.dims()[t]) {
      throw InvalidArgument("spectral operator: eigenspace " + std::to_string(t) + " has dimension " +
                            std::to_string(eigenspaces_[t].dim()) + ", class requires " +
                            std::to_string(class_.dims()[t]));
    }
    for (std::size_t s = 0; s < t; ++s) {
      if (!eigenspaces_[s].orthogonal_to(eigenspaces_[t])) {
        throw InvalidArgument("spectral operator: eigenspaces " + std::to_string(s) + " and " + std::to_string(t) +
                              " are not orthogonal");
      }
    }
  }
  image_ = sum(eigenspaces_, class_.n());
}

Matrix materialize(const SpectralOperator& a) {
  Matrix m(a.ambient_dim(), a.ambient_dim());
  for (std::size_t t = 0; t < a.eigenspaces().size(); ++t) {
    m += a.eigenspace(t).projection().scaled(Scalar(a.eigenvalue(t)));
  }
  return m;
}

namespace {

void require_same_ambient(const SpectralOperator& a, const SpectralOperator& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("operators on different ambient spaces");
}

}  // namespace

bool commutes(const SpectralOperator& a, const SpectralOperator& b) {
  require_same_ambient(a, b);
  for (const auto& x : a.eigenspaces()) {
    for (const auto& y : b.eigenspaces()) {
      if (!is_compatible(x, y)) return false;
    }
  }
  return true;
}

bool orthogonal(const SpectralOperator& a, const SpectralOperator& b) {
  require_same_ambient(a, b);
  return a.image().orthogonal_to(b.image());
}

Rational hs_inner(const SpectralOperator& a, const SpectralOperator& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  Scalar total;
  for (std::size_t s = 0; s < a.eigenspaces().size(); ++s) {
    const Matrix& p = a.eigenspace(s).projection();
    for (std::size_t t = 0; t < b.eigenspaces().size(); ++t) {
      const Matrix& q = b.eigenspace(t).projection();
      // tr(PQ) = sum_{r,c} P_rc Q_cr
      Scalar tr;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (p(r, c).is_zero() || q(c, r).is_zero()) continue;
          tr += p(r, c) * q(c, r);
        }
      }
      total += tr * Scalar(a.eigenvalue(s) * b.eigenvalue(t));
    }
  }
  if (!total.is_real()) throw Error("hs_inner: non-real trace for self-adjoint operators");
  return total.re();
}

Subspace image_of(const SpectralOperator& a) { return a.image(); }

SpectralOperator conjugated(const SpectralOperator& a, const Matrix& v) {
  std::vector<Subspace> spaces;
  spaces.reserve(a.eigenspaces().size());
  for (const auto& x : a.eigenspaces()) spaces.push_back(image_under(v, x));
  return {a.descriptor(), std::move(spaces)};
}

}  // namespace cpt
