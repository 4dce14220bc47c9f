#include "cpt/rigidity.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cpt/compatibility.hpp"
#include "cpt/error.hpp"

namespace cpt {

FiniteTransformation::FiniteTransformation(std::vector<SpectralOperator> domain, std::vector<std::size_t> mapping)
    : domain_(std::move(domain)), mapping_(std::move(mapping)) {
  if (mapping_.size() != domain_.size()) throw InvalidArgument("transformation: mapping size differs from domain");
  std::vector<bool> hit(domain_.size(), false);
  for (auto target : mapping_) {
    if (target >= domain_.size() || hit[target]) throw InvalidArgument("transformation: mapping is not a bijection");
    hit[target] = true;
  }
  for (std::size_t s = 0; s < domain_.size(); ++s) {
    if (!(domain_[s].descriptor() == domain_.front().descriptor())) {
      throw InvalidArgument("transformation: domain operators belong to different classes");
    }
    for (std::size_t r = 0; r < s; ++r) {
      if (domain_[r] == domain_[s]) {
        throw InvalidArgument("transformation: domain entries " + std::to_string(r) + " and " + std::to_string(s) +
                              " coincide");
      }
    }
  }
}

FiniteTransformation FiniteTransformation::identity(std::vector<SpectralOperator> domain) {
  std::vector<std::size_t> mapping(domain.size());
  for (std::size_t s = 0; s < mapping.size(); ++s) mapping[s] = s;
  return {std::move(domain), std::move(mapping)};
}

FiniteTransformation FiniteTransformation::from_images(std::vector<SpectralOperator> domain,
                                                       std::span<const SpectralOperator> images) {
  if (images.size() != domain.size()) throw InvalidArgument("transformation: one image per domain entry required");
  std::vector<std::size_t> mapping(domain.size());
  for (std::size_t s = 0; s < images.size(); ++s) {
    const auto it = std::find(domain.begin(), domain.end(), images[s]);
    if (it == domain.end()) {
      throw InvalidArgument("transformation: image of entry " + std::to_string(s) + " is outside the domain");
    }
    mapping[s] = static_cast<std::size_t>(it - domain.begin());
  }
  return {std::move(domain), std::move(mapping)};
}

std::vector<SpectralOperator> default_bystanders(const SpectralOperator& a, const SpectralOperator& b) {
  std::vector<Subspace> family = a.eigenspaces();
  family.insert(family.end(), b.eigenspaces().begin(), b.eigenspaces().end());
  const Apartment ap(refine_to_frame(a.ambient_dim(), family), a.descriptor());
  std::vector<SpectralOperator> out;
  MemberEnumerator it(ap);
  while (it.next()) {
    SpectralOperator c = ap.to_operator(it.current());
    if (c == a || c == b) continue;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

FiniteTransformation swap_with_bystanders(SpectralOperator a, SpectralOperator b,
                                          std::optional<std::vector<SpectralOperator>> bystanders) {
  std::vector<SpectralOperator> rest = bystanders ? std::move(*bystanders) : default_bystanders(a, b);
  std::vector<SpectralOperator> domain{std::move(a), std::move(b)};
  for (auto& c : rest) {
    if (c == domain[0] || c == domain[1]) continue;
    domain.push_back(std::move(c));
  }
  std::vector<std::size_t> mapping(domain.size());
  for (std::size_t s = 0; s < mapping.size(); ++s) mapping[s] = s;
  std::swap(mapping[0], mapping[1]);
  return {std::move(domain), std::move(mapping)};
}

Subspace span_of_lines(const std::vector<Vector>& lines, std::size_t begin, std::size_t end, std::size_t n) {
  return projection_of(n, std::span<const Vector>(lines.data() + begin, end - begin));
}

}  // namespace

FiniteTransformation example_orth_swap(const ClassDescriptor& cls, const Subspace& x,
                                       std::optional<std::vector<SpectralOperator>> bystanders) {
  if (cls.is_projection_class()) {
    throw ProjectionClass("example_orth_swap: a single-eigenvalue class has one operator per image");
  }
  if (x.ambient_dim() != cls.n()) throw DimensionMismatch("example_orth_swap: subspace outside C^n");
  if (x.dim() != cls.rank()) {
    throw InvalidArgument("example_orth_swap: dim X = " + std::to_string(x.dim()) + " but the class has rank " +
                          std::to_string(cls.rank()));
  }
  const std::size_t n = cls.n();
  const std::vector<Vector> lines = orthogonal_basis(x);
  std::vector<Vector> swapped = lines;
  // First line of slot 0 trades places with the first line of slot 1.
  std::swap(swapped[0], swapped[cls.dims()[0]]);

  std::vector<Subspace> a_spaces;
  std::vector<Subspace> b_spaces;
  std::size_t begin = 0;
  for (auto d : cls.dims()) {
    a_spaces.push_back(span_of_lines(lines, begin, begin + d, n));
    b_spaces.push_back(span_of_lines(swapped, begin, begin + d, n));
    begin += d;
  }
  return swap_with_bystanders(SpectralOperator(cls, std::move(a_spaces)), SpectralOperator(cls, std::move(b_spaces)),
                              std::move(bystanders));
}

FiniteTransformation example_comm_swap(const Rational& alpha, const Rational& beta, std::size_t m_dim,
                                       const Subspace& x, const Subspace& y,
                                       std::optional<std::vector<SpectralOperator>> bystanders) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionMismatch("example_comm_swap: ambient mismatch");
  if (x.dim() != m_dim || y.dim() != m_dim) {
    throw InvalidArgument("example_comm_swap: X and Y must both have dimension " + std::to_string(m_dim));
  }
  if (!x.orthogonal_to(y)) throw InvalidArgument("example_comm_swap: X and Y must be orthogonal");
  const ClassDescriptor cls(x.ambient_dim(), {alpha, beta}, {m_dim, m_dim});
  return swap_with_bystanders(SpectralOperator(cls, {x, y}), SpectralOperator(cls, {y, x}), std::move(bystanders));
}

namespace {

bool holds(const SpectralOperator& a, const SpectralOperator& b, Relation relation) {
  return relation == Relation::commute ? commutes(a, b) : orthogonal(a, b);
}

}  // namespace

bool check_preservation_serial(const FiniteTransformation& t, Relation relation) {
  for (std::size_t s = 0; s < t.size(); ++s) {
    for (std::size_t r = s + 1; r < t.size(); ++r) {
      if (holds(t.source(s), t.source(r), relation) != holds(t.target(s), t.target(r), relation)) return false;
    }
  }
  return true;
}

bool check_preservation(const FiniteTransformation& t, Relation relation) {
  // f permutes the domain, so one relation table answers both sides.
  const std::size_t size = t.size();
  std::vector<char> table(size * size, 0);
  const auto rows = static_cast<std::ptrdiff_t>(size);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t sr = 0; sr < rows; ++sr) {
    const auto s = static_cast<std::size_t>(sr);
    for (std::size_t r = s + 1; r < size; ++r) {
      const char h = holds(t.source(s), t.source(r), relation) ? 1 : 0;
      table[s * size + r] = h;
      table[r * size + s] = h;
    }
  }
  const auto& f = t.mapping();
  for (std::size_t s = 0; s < size; ++s) {
    for (std::size_t r = s + 1; r < size; ++r) {
      if (table[s * size + r] != table[f[s] * size + f[r]]) return false;
    }
  }
  return true;
}

std::optional<TraceWitness> gram_obstruction(const FiniteTransformation& t) {
  for (std::size_t s = 0; s < t.size(); ++s) {
    for (std::size_t r = s + 1; r < t.size(); ++r) {
      if (t.mapping()[s] == s && t.mapping()[r] == r) continue;
      Rational lhs = hs_inner(t.source(s), t.source(r));
      Rational rhs = hs_inner(t.target(s), t.target(r));
      if (lhs != rhs) return TraceWitness{s, r, std::move(lhs), std::move(rhs)};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_inducing_frame_permutation(const FiniteTransformation& t,
                                                                         const Frame& frame) {
  if (t.size() == 0) return std::nullopt;
  const Apartment ap(frame, t.source(0).descriptor());
  std::vector<Labeling> labels;
  labels.reserve(t.size());
  for (const auto& op : t.domain()) {
    auto l = ap.label_of(op);
    if (!l) throw MembershipError("find_inducing_frame_permutation: domain operator outside the apartment");
    labels.push_back(std::move(*l));
  }
  const std::size_t n = frame.size();
  // Line i may go to line j iff every domain member's label at i reappears at j in its image.
  std::vector<std::vector<char>> allowed(n, std::vector<char>(n, 1));
  for (std::size_t s = 0; s < t.size(); ++s) {
    const Labeling& from = labels[s];
    const Labeling& to = labels[t.mapping()[s]];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (from.raw(i) != to.raw(j)) allowed[i][j] = 0;
      }
    }
  }
  // Kuhn's augmenting paths for a perfect matching lines -> lines.
  std::vector<std::ptrdiff_t> owner(n, -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!allowed[i][j] || seen[j]) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
        owner[j] = static_cast<std::ptrdiff_t>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    if (!augment(i, seen)) return std::nullopt;
  }
  std::vector<std::size_t> pi(n);
  for (std::size_t j = 0; j < n; ++j) pi[static_cast<std::size_t>(owner[j])] = j;
  return pi;
}

SpectralOperator witness_commuting_operator(const SpectralOperator& a, const Subspace& y) {
  const ClassDescriptor& cls = a.descriptor();
  if (y.ambient_dim() != cls.n()) throw DimensionMismatch("witness_commuting_operator: Y outside C^n");
  if (y.dim() != 1) throw NotAnEigenline("witness_commuting_operator: Y must be a line");
  const auto& spaces = a.eigenspaces();
  const bool inside = std::any_of(spaces.begin(), spaces.end(), [&](const Subspace& x) { return x.contains(y); });
  if (!inside) throw NotAnEigenline("witness_commuting_operator: Y lies in no maximal eigenspace of A");
  const std::size_t k = cls.rank();
  if (cls.n() + 1 < 2 * k) {
    throw NoRoom("witness_commuting_operator: need n >= 2k - 1 (n=" + std::to_string(cls.n()) +
                 ", k=" + std::to_string(k) + ")");
  }

  const std::vector<Vector> spare = orthogonal_basis(orthogonal_complement(a.image()));
  const auto& dims = cls.dims();
  const auto y_slot = static_cast<std::size_t>(std::min_element(dims.begin(), dims.end()) - dims.begin());
  const Vector y_dir = y.basis().front();

  std::vector<Subspace> b_spaces(cls.slots());
  std::size_t next = 0;
  for (std::size_t t = 0; t < cls.slots(); ++t) {
    std::vector<Vector> spanning;
    std::size_t need = dims[t];
    if (t == y_slot) {
      spanning.push_back(y_dir);
      --need;
    }
    for (; need > 0; --need) spanning.push_back(spare.at(next++));
    b_spaces[t] = projection_of(cls.n(), spanning);
  }
  return {cls, std::move(b_spaces)};
}

}  // namespace cpt
