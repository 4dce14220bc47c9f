#include "cpt/subspace.hpp"

#include <algorithm>
#include <string>

#include "cpt/error.hpp"

namespace cpt {

namespace {

void require_same_ambient(const Subspace& x, const Subspace& y, const char* op) {
  if (x.ambient_dim() != y.ambient_dim()) {
    throw DimensionMismatch(std::string(op) + ": subspaces live in C^" + std::to_string(x.ambient_dim()) +
                            " and C^" + std::to_string(y.ambient_dim()));
  }
}

Subspace kernel_subspace(const Matrix& constraints) {
  return projection_of(constraints.cols(), constraints.kernel_basis());
}

void normalize_leading(Vector& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (x.is_one()) return;
    const Scalar inv = x.inverse();
    for (auto& y : v) {
      if (!y.is_zero()) y *= inv;
    }
    return;
  }
}

}  // namespace

Subspace Subspace::zero(std::size_t n) { return {Matrix(n, n), 0}; }

Subspace Subspace::full(std::size_t n) { return {Matrix::identity(n), n}; }

Subspace Subspace::line(const Vector& direction) {
  if (cpt::is_zero(direction)) throw InvalidArgument("line spanned by the zero vector");
  const Vector v[] = {direction};
  return projection_of(direction.size(), v);
}

Subspace Subspace::from_projection(Matrix proj) {
  if (!proj.is_square()) throw InvalidArgument("projection must be square");
  if (!proj.is_hermitian()) throw InvalidArgument("projection is not self-adjoint");
  if (proj * proj != proj) throw InvalidArgument("projection is not idempotent");
  const Scalar t = proj.trace();
  const std::size_t dim = t.re().get_num().get_ui();
  return {std::move(proj), dim};
}

std::vector<Vector> Subspace::basis() const { return proj_.column_basis(); }

bool Subspace::contains(std::span<const Scalar> v) const {
  const Vector pv = proj_ * v;
  return std::equal(pv.begin(), pv.end(), v.begin(), v.end());
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  if (other.dim_ > dim_) return false;
  return proj_ * other.proj_ == other.proj_;
}

bool Subspace::orthogonal_to(const Subspace& other) const {
  require_same_ambient(*this, other, "orthogonal_to");
  if (dim_ + other.dim_ > ambient_dim()) return false;
  return product_is_zero(proj_, other.proj_);
}

Subspace projection_of(std::size_t n, std::span<const Vector> vectors) {
  if (n == 0) throw InvalidArgument("ambient dimension must be at least 1");
  for (const auto& v : vectors) {
    if (v.size() != n) {
      throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in C^" + std::to_string(n));
    }
  }
  if (vectors.empty()) return Subspace::zero(n);
  const std::vector<Vector> independent = Matrix::from_columns(n, vectors).column_basis();
  if (independent.empty()) return Subspace::zero(n);
  const Matrix v = Matrix::from_columns(n, independent);
  const Matrix v_adj = v.adjoint();
  const Matrix gram_inv = (v_adj * v).inverse();
  return {v * gram_inv * v_adj, independent.size()};
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  require_same_ambient(x, y, "intersect");
  if (x.is_zero() || y.is_zero()) return Subspace::zero(x.ambient_dim());
  if (x.contains(y)) return y;
  if (y.contains(x)) return x;
  const Matrix id = Matrix::identity(x.ambient_dim());
  return kernel_subspace((id - x.projection()).stacked(id - y.projection()));
}

Subspace sum(const Subspace& x, const Subspace& y) {
  require_same_ambient(x, y, "sum");
  if (x.contains(y)) return x;
  if (y.contains(x)) return y;
  std::vector<Vector> spanning = x.basis();
  for (auto& v : y.basis()) spanning.push_back(std::move(v));
  return projection_of(x.ambient_dim(), spanning);
}

Subspace sum(std::span<const Subspace> parts, std::size_t n) {
  std::vector<Vector> spanning;
  for (const auto& part : parts) {
    if (part.ambient_dim() != n) throw DimensionMismatch("sum: part outside C^" + std::to_string(n));
    for (auto& v : part.basis()) spanning.push_back(std::move(v));
  }
  return projection_of(n, spanning);
}

Subspace complement_within(const Subspace& x, const Subspace& y) {
  require_same_ambient(x, y, "complement_within");
  if (x.is_zero()) return y;
  const Matrix id = Matrix::identity(x.ambient_dim());
  return kernel_subspace(x.projection().stacked(id - y.projection()));
}

Subspace orthogonal_complement(const Subspace& x) {
  return {Matrix::identity(x.ambient_dim()) - x.projection(), x.ambient_dim() - x.dim()};
}

std::vector<Vector> gram_schmidt(std::vector<Vector> vectors) {
  std::vector<Vector> out;
  std::vector<Scalar> norms;
  for (auto& v : vectors) {
    for (std::size_t l = 0; l < out.size(); ++l) {
      const Scalar coeff = inner(out[l], v) / norms[l];
      if (coeff.is_zero()) continue;
      for (std::size_t r = 0; r < v.size(); ++r) {
        if (!out[l][r].is_zero()) v[r] -= coeff * out[l][r];
      }
    }
    if (is_zero(v)) continue;
    normalize_leading(v);
    norms.push_back(inner(v, v));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> orthogonal_basis(const Subspace& x) { return gram_schmidt(x.basis()); }

Subspace image_under(const Matrix& v, const Subspace& x) {
  if (v.cols() != x.ambient_dim() || !v.is_square()) throw DimensionMismatch("image_under: shape mismatch");
  std::vector<Vector> images;
  for (const auto& b : x.basis()) images.push_back(v * b);
  return projection_of(x.ambient_dim(), images);
}

}  // namespace cpt
