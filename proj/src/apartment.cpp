#include "cpt/apartment.hpp"

#include <bit>
#include <string>

#include "cpt/error.hpp"

namespace cpt {

namespace {

IndexMask all_lines(std::size_t n) { return n == 64 ? ~IndexMask{0} : (IndexMask{1} << n) - 1; }

void require_index(const Labeling& a, std::size_t i) {
  if (i >= a.size()) {
    throw InvalidArgument("frame index " + std::to_string(i) + " out of range for " + std::to_string(a.size()) +
                          " lines");
  }
}

std::uint64_t checked_binomial_product(std::uint64_t acc, std::uint64_t n, std::uint64_t r) {
  // acc * C(n, r), built incrementally so intermediate values stay exact.
  std::uint64_t binom = 1;
  for (std::uint64_t t = 1; t <= r; ++t) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(binom, n - r + t, &next)) throw Error("member_count overflows 64 bits");
    binom = next / t;
  }
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(acc, binom, &out)) throw Error("member_count overflows 64 bits");
  return out;
}

}  // namespace

PairIndex::PairIndex(std::size_t a, std::size_t b) : i(a < b ? a : b), j(a < b ? b : a) {
  if (a == b) throw InvalidArgument("pair index needs two distinct frame indices");
}

IndexMask Labeling::image_mask() const {
  IndexMask m = 0;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i] != kKernel) m |= IndexMask{1} << i;
  }
  return m;
}

IndexMask Labeling::slot_mask(int slot) const {
  IndexMask m = 0;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i] == slot) m |= IndexMask{1} << i;
  }
  return m;
}

Apartment::Apartment(Frame frame, ClassDescriptor cls) : frame_(std::move(frame)), class_(std::move(cls)) {
  if (frame_.ambient_dim() != class_.n()) {
    throw DimensionMismatch("apartment: frame in C^" + std::to_string(frame_.ambient_dim()) + ", class in C^" +
                            std::to_string(class_.n()));
  }
  if (class_.n() > kMaxFrameSize) throw InvalidArgument("apartment: at most 64 frame lines supported");
}

bool Apartment::contains(const Labeling& a) const {
  if (a.size() != n()) return false;
  std::vector<std::size_t> counts(class_.slots(), 0);
  for (int s : a.slots()) {
    if (s == Labeling::kKernel) continue;
    if (s < 0 || static_cast<std::size_t>(s) >= counts.size()) return false;
    ++counts[static_cast<std::size_t>(s)];
  }
  return counts == class_.dims();
}

void Apartment::require_member(const Labeling& a) const {
  if (!contains(a)) throw MembershipError("labeling is not a member of the apartment");
}

SpectralOperator Apartment::to_operator(const Labeling& a) const {
  require_member(a);
  std::vector<Subspace> spaces;
  spaces.reserve(class_.slots());
  for (std::size_t t = 0; t < class_.slots(); ++t) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n(); ++i) {
      if (a.raw(i) == static_cast<int>(t)) idx.push_back(i);
    }
    spaces.push_back(frame_.span_of(idx));
  }
  return {class_, std::move(spaces)};
}

std::optional<Labeling> Apartment::label_of(const SpectralOperator& op) const {
  if (!(op.descriptor() == class_)) return std::nullopt;
  std::vector<int> slots(n(), Labeling::kKernel);
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t t = 0; t < class_.slots(); ++t) {
      if (op.eigenspace(t).contains(frame_.direction(i))) {
        slots[i] = static_cast<int>(t);
        break;
      }
    }
  }
  Labeling a(std::move(slots));
  // Orthogonal lines inside X_t with the right count span X_t.
  if (!contains(a)) return std::nullopt;
  return a;
}

std::uint64_t member_count(const Apartment& ap) {
  std::uint64_t count = 1;
  std::uint64_t remaining = ap.n();
  for (auto d : ap.descriptor().dims()) {
    count = checked_binomial_product(count, remaining, d);
    remaining -= d;
  }
  return count;
}

MemberEnumerator::MemberEnumerator(const Apartment& ap)
    : n_(ap.n()),
      dims_(ap.descriptor().dims()),
      pool_(dims_.size()),
      choice_(dims_.size()),
      current_(std::vector<int>(ap.n(), Labeling::kKernel)) {}

void MemberEnumerator::reset_from(std::size_t slot) {
  for (std::size_t s = slot; s < dims_.size(); ++s) {
    std::vector<bool> taken(n_, false);
    if (s > 0) {
      for (std::size_t t = 0; t < s; ++t) {
        for (auto pos : choice_[t]) taken[pool_[t][pos]] = true;
      }
    }
    pool_[s].clear();
    for (std::size_t i = 0; i < n_; ++i) {
      if (!taken[i]) pool_[s].push_back(i);
    }
    choice_[s].resize(dims_[s]);
    for (std::size_t p = 0; p < dims_[s]; ++p) choice_[s][p] = p;
  }
}

void MemberEnumerator::rebuild() {
  std::vector<int> slots(n_, Labeling::kKernel);
  for (std::size_t s = 0; s < dims_.size(); ++s) {
    for (auto pos : choice_[s]) slots[pool_[s][pos]] = static_cast<int>(s);
  }
  current_ = Labeling(std::move(slots));
}

bool MemberEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    reset_from(0);
    rebuild();
    return true;
  }
  for (std::size_t s = dims_.size(); s-- > 0;) {
    auto& c = choice_[s];
    const std::size_t pool = pool_[s].size();
    const std::size_t d = c.size();
    for (std::size_t p = d; p-- > 0;) {
      if (c[p] < pool - d + p) {
        ++c[p];
        for (std::size_t q = p + 1; q < d; ++q) c[q] = c[q - 1] + 1;
        reset_from(s + 1);
        rebuild();
        return true;
      }
    }
  }
  done_ = true;
  return false;
}

std::vector<Labeling> enumerate_members(const Apartment& ap) {
  std::vector<Labeling> out;
  out.reserve(member_count(ap));
  MemberEnumerator it(ap);
  while (it.next()) out.push_back(it.current());
  return out;
}

bool in_plus_plus(const Labeling& a, PairIndex p) {
  require_index(a, p.j);
  return a.raw(p.i) != Labeling::kKernel && a.raw(p.i) == a.raw(p.j);
}

bool in_minus_minus(const Labeling& a, PairIndex p) {
  require_index(a, p.j);
  return a.raw(p.i) == Labeling::kKernel && a.raw(p.j) == Labeling::kKernel;
}

bool in_plus_minus(const Labeling& a, std::size_t i, std::size_t j) {
  require_index(a, i);
  require_index(a, j);
  if (i == j) throw InvalidArgument("in_plus_minus needs distinct indices");
  return a.raw(i) != Labeling::kKernel && a.raw(i) != a.raw(j);
}

bool in_orthocomplementary(const Labeling& a, PairIndex p) {
  return in_plus_minus(a, p.i, p.j) || in_plus_minus(a, p.j, p.i);
}

std::size_t image_overlap(const Labeling& a, const Labeling& b) {
  return static_cast<std::size_t>(std::popcount(a.image_mask() & b.image_mask()));
}

std::size_t n_count(const Labeling& a, const Labeling& b, const Apartment& ap) {
  ap.require_member(a);
  ap.require_member(b);
  const std::size_t n = ap.n();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairIndex p(i, j);
      if (in_orthocomplementary(a, p) && in_orthocomplementary(b, p)) ++count;
    }
  }
  return count;
}

long long lemma3_bound(long long k, long long m, long long n) {
  if (m < 0 || m > k || k > n) {
    throw InvalidArgument("lemma3_bound requires 0 <= m <= k <= n (got k=" + std::to_string(k) +
                          ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  return (k - m) * (k - m) + m * (n - 2 * k + m);
}

Rational c_eval(const Rational& x, long long k, long long n) {
  if (k < 0 || k > n) throw InvalidArgument("c_eval requires 0 <= k <= n");
  const Rational kq(static_cast<long>(k));
  const Rational nq(static_cast<long>(n));
  return Rational(2 * x * x - (4 * kq - nq) * x + kq * kq);
}

IndexMask s_support(std::size_t i, std::span<const Labeling> x, const Apartment& ap) {
  if (i >= ap.n()) throw InvalidArgument("compute_S: frame index out of range");
  IndexMask s = all_lines(ap.n());
  for (const auto& a : x) {
    ap.require_member(a);
    // Either the eigenspace through e_i, or Im(A)^perp when e_i is in the kernel.
    s &= a.slot_mask(a.raw(i));
  }
  return s;
}

Subspace compute_S(std::size_t i, std::span<const Labeling> x, const Apartment& ap) {
  const IndexMask s = s_support(i, x, ap);
  std::vector<std::size_t> idx;
  for (std::size_t l = 0; l < ap.n(); ++l) {
    if (s >> l & 1U) idx.push_back(l);
  }
  return ap.frame().span_of(idx);
}

namespace {

InexactDecision decide_from_supports(std::vector<IndexMask> supports) {
  InexactDecision d;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (std::popcount(supports[i]) < 2) continue;
    const IndexMask others = supports[i] & ~(IndexMask{1} << i);
    d.inexact = true;
    d.witness = PairIndex(i, static_cast<std::size_t>(std::countr_zero(others)));
    break;
  }
  d.supports = std::move(supports);
  return d;
}

std::vector<IndexMask> supports_of(std::span<const Labeling> x, const Apartment& ap) {
  std::vector<IndexMask> supports(ap.n());
  for (std::size_t i = 0; i < ap.n(); ++i) supports[i] = s_support(i, x, ap);
  return supports;
}

bool extension_is_exact(const std::vector<IndexMask>& supports, const Labeling& a) {
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (std::popcount(supports[i] & a.slot_mask(a.raw(i))) >= 2) return false;
  }
  return true;
}

}  // namespace

InexactDecision is_orthogonally_inexact(std::span<const Labeling> x, const Apartment& ap) {
  return decide_from_supports(supports_of(x, ap));
}

std::vector<Labeling> type_one_set(PairIndex p, std::span<const Labeling> members) {
  std::vector<Labeling> out;
  for (const auto& a : members) {
    if (in_plus_plus(a, p) || in_minus_minus(a, p)) out.push_back(a);
  }
  return out;
}

Frame rotated_frame(const Frame& frame, PairIndex p) {
  if (p.j >= frame.size()) throw InvalidArgument("rotated_frame: index out of range");
  std::vector<Vector> dirs = frame.directions();
  const Vector& ei = frame.direction(p.i);
  const Vector& ej = frame.direction(p.j);
  // |e_j|^2 e_i + |e_i|^2 e_j is orthogonal to e_i - e_j; for equal norms it is e_i + e_j up to scale.
  const Scalar ni = inner(ei, ei);
  const Scalar nj = inner(ej, ej);
  Vector plus(ei.size());
  Vector minus(ei.size());
  for (std::size_t r = 0; r < ei.size(); ++r) {
    plus[r] = nj * ei[r] + ni * ej[r];
    minus[r] = ei[r] - ej[r];
  }
  dirs[p.i] = std::move(plus);
  dirs[p.j] = std::move(minus);
  return Frame::from_directions(std::move(dirs));
}

namespace {

struct MaximalSetup {
  std::vector<Labeling> outside;
  std::vector<IndexMask> supports;
  bool inexact = false;
};

MaximalSetup prepare_maximal_check(PairIndex p, const Apartment& ap) {
  if (p.j >= ap.n()) throw InvalidArgument("verify_maximal_inexact: index out of range");
  MaximalSetup s;
  std::vector<Labeling> inside;
  MemberEnumerator it(ap);
  while (it.next()) {
    const Labeling& a = it.current();
    if (in_plus_plus(a, p) || in_minus_minus(a, p)) {
      inside.push_back(a);
    } else {
      s.outside.push_back(a);
    }
  }
  s.supports = supports_of(inside, ap);
  s.inexact = decide_from_supports(s.supports).inexact;
  return s;
}

}  // namespace

bool verify_maximal_inexact_serial(PairIndex p, const Apartment& ap) {
  const MaximalSetup s = prepare_maximal_check(p, ap);
  if (!s.inexact) return false;
  for (const auto& a : s.outside) {
    if (!extension_is_exact(s.supports, a)) return false;
  }
  return true;
}

bool verify_maximal_inexact(PairIndex p, const Apartment& ap) {
  const MaximalSetup s = prepare_maximal_check(p, ap);
  if (!s.inexact) return false;
  const auto count = static_cast<std::ptrdiff_t>(s.outside.size());
  bool all_exact = true;
#pragma omp parallel for reduction(&& : all_exact) schedule(static)
  for (std::ptrdiff_t q = 0; q < count; ++q) {
    all_exact = all_exact && extension_is_exact(s.supports, s.outside[static_cast<std::size_t>(q)]);
  }
  return all_exact;
}

bool decide_orthogonality_by_count(const Labeling& a, const Labeling& b, const Apartment& ap) {
  const std::size_t k = ap.rank();
  if (ap.n() < 4 * k) {
    throw ThresholdViolation("orthogonality by count needs n >= 4k (n=" + std::to_string(ap.n()) +
                             ", k=" + std::to_string(k) + ")");
  }
  return n_count(a, b, ap) == k * k;
}

}  // namespace cpt
