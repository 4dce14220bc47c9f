#include "cpt/generators.hpp"

#include <algorithm>
#include <functional>

#include "cpt/error.hpp"

namespace cpt {

namespace {

std::size_t draw(Rng& rng, std::size_t range) { return static_cast<std::size_t>(rng() % range); }

Scalar small_entry(Rng& rng, bool complex_entries) {
  const auto re = static_cast<long>(draw(rng, 5)) - 2;
  if (!complex_entries || draw(rng, 3) != 0) return Scalar(re);
  const auto im = static_cast<long>(draw(rng, 5)) - 2;
  return {Rational(re), Rational(im)};
}

void shuffle(std::vector<std::size_t>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

}  // namespace

Frame random_frame(std::size_t n, Rng& rng, bool complex_entries) {
  for (;;) {
    std::vector<Vector> vectors(n, Vector(n));
    for (auto& v : vectors) {
      for (auto& x : v) x = small_entry(rng, complex_entries);
    }
    std::vector<Vector> ortho = gram_schmidt(std::move(vectors));
    if (ortho.size() == n) return Frame::from_directions(std::move(ortho));
  }
}

Labeling random_member(const Apartment& ap, Rng& rng) {
  std::vector<std::size_t> order(ap.n());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  shuffle(order, rng);
  std::vector<int> slots(ap.n(), Labeling::kKernel);
  std::size_t pos = 0;
  const auto& dims = ap.descriptor().dims();
  for (std::size_t t = 0; t < dims.size(); ++t) {
    for (std::size_t c = 0; c < dims[t]; ++c) slots[order[pos++]] = static_cast<int>(t);
  }
  return Labeling(std::move(slots));
}

SpectralOperator random_operator(const ClassDescriptor& cls, Rng& rng, bool complex_entries) {
  const Apartment ap(random_frame(cls.n(), rng, complex_entries), cls);
  return ap.to_operator(random_member(ap, rng));
}

CompatibleFamily random_compatible_family(std::size_t n, std::size_t count, Rng& rng) {
  CompatibleFamily out{random_frame(n, rng, draw(rng, 2) == 0), {}, {}};
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::size_t> lines;
    while (lines.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (draw(rng, 2) == 0) lines.push_back(i);
      }
    }
    // Triangular combinations of the chosen directions: same span, different basis.
    std::vector<Vector> spanning;
    for (std::size_t a = 0; a < lines.size(); ++a) {
      Vector v = out.generator.direction(lines[a]);
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        const Scalar coeff(static_cast<long>(draw(rng, 5)) - 2);
        if (coeff.is_zero()) continue;
        const Vector& w = out.generator.direction(lines[b]);
        for (std::size_t r = 0; r < n; ++r) v[r] += coeff * w[r];
      }
      spanning.push_back(std::move(v));
    }
    out.family.push_back(projection_of(n, spanning));
    out.line_sets.push_back(std::move(lines));
  }
  return out;
}

Matrix signed_permutation_matrix(const std::vector<std::size_t>& perm, const std::vector<int>& signs) {
  if (perm.size() != signs.size()) throw InvalidArgument("signed permutation: size mismatch");
  Matrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = Scalar(signs[i] < 0 ? -1L : 1L);
  return m;
}

std::vector<std::vector<std::size_t>> integer_partitions(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t smallest) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = smallest; part <= remaining; ++part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (k > 0) rec(k, 1);
  return out;
}

ClassDescriptor class_with_dims(std::size_t n, const std::vector<std::size_t>& dims) {
  std::vector<Rational> alphas;
  for (std::size_t t = 0; t < dims.size(); ++t) alphas.emplace_back(static_cast<long>(t + 1));
  return {n, std::move(alphas), dims};
}

}  // namespace cpt
