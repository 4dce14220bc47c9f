#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpt/compatibility.hpp"
#include "cpt/spectral.hpp"

namespace cpt {

/// Bit i set = frame line i. Apartments are limited to 64 lines.
using IndexMask = std::uint64_t;
inline constexpr std::size_t kMaxFrameSize = 64;

/// Unordered pair {i, j} of distinct frame indices, stored with i < j.
struct PairIndex {
  PairIndex(std::size_t a, std::size_t b);
  std::size_t i;
  std::size_t j;
  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

/// Assignment of each frame line to an eigenvalue slot, or to the kernel.
class Labeling {
 public:
  static constexpr int kKernel = -1;

  Labeling() = default;
  explicit Labeling(std::vector<int> slots) : slots_(std::move(slots)) {}

  std::size_t size() const { return slots_.size(); }
  int raw(std::size_t i) const { return slots_[i]; }
  std::optional<std::size_t> slot(std::size_t i) const {
    const int s = slots_.at(i);
    return s == kKernel ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(s));
  }
  bool labeled(std::size_t i) const { return slots_.at(i) != kKernel; }
  const std::vector<int>& slots() const { return slots_; }

  IndexMask image_mask() const;
  IndexMask slot_mask(int slot) const;

  friend auto operator<=>(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> slots_;
};

/// The members of a conjugacy class whose eigenspaces are spanned by lines of
/// one frame.
class Apartment {
 public:
  Apartment(Frame frame, ClassDescriptor cls);
  static Apartment standard(const ClassDescriptor& cls) { return {Frame::standard(cls.n()), cls}; }

  const Frame& frame() const { return frame_; }
  const ClassDescriptor& descriptor() const { return class_; }
  std::size_t n() const { return class_.n(); }
  std::size_t rank() const { return class_.rank(); }

  bool contains(const Labeling& a) const;
  /// Throws MembershipError unless `a` labels this apartment's frame with the class multiplicities.
  void require_member(const Labeling& a) const;
  SpectralOperator to_operator(const Labeling& a) const;
  /// The labeling of `op` if it belongs to this apartment.
  std::optional<Labeling> label_of(const SpectralOperator& op) const;

 private:
  Frame frame_;
  ClassDescriptor class_;
};

/// n! / (d_1! ... d_m! (n-k)!). Throws Error on 64-bit overflow.
std::uint64_t member_count(const Apartment& ap);

/// Streams apartment members without materializing them all. The order is
/// lexicographic in (index set of slot 0, index set of slot 1 among the
/// remaining lines, ...).
class MemberEnumerator {
 public:
  explicit MemberEnumerator(const Apartment& ap);
  /// Moves to the next member; the first call yields the first one.
  bool next();
  const Labeling& current() const { return current_; }

 private:
  void reset_from(std::size_t slot);
  void rebuild();

  std::size_t n_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::size_t>> pool_;
  std::vector<std::vector<std::size_t>> choice_;
  Labeling current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Labeling> enumerate_members(const Apartment& ap);

/// One eigenspace contains both e_i and e_j.
bool in_plus_plus(const Labeling& a, PairIndex p);
/// The image is orthogonal to e_i and e_j.
bool in_minus_minus(const Labeling& a, PairIndex p);
/// Some eigenspace contains e_i but not e_j.
bool in_plus_minus(const Labeling& a, std::size_t i, std::size_t j);
/// Membership in C_ij = A(+i,-j) ∪ A(+j,-i).
bool in_orthocomplementary(const Labeling& a, PairIndex p);

/// dim(Im A ∩ Im B) for apartment members.
std::size_t image_overlap(const Labeling& a, const Labeling& b);
/// Number of orthocomplementary subsets C_ij (unordered pairs) containing both A and B.
std::size_t n_count(const Labeling& a, const Labeling& b, const Apartment& ap);

/// (k-m)^2 + m(n-2k+m); requires 0 <= m <= k <= n.
long long lemma3_bound(long long k, long long m, long long n);
/// c(x) = 2x^2 - (4k-n)x + k^2; requires 0 <= k <= n.
Rational c_eval(const Rational& x, long long k, long long n);

/// Index set of S_i: the intersection of every eigenspace (of a member of X)
/// containing e_i and of Im(A)^perp for every member A whose image is
/// orthogonal to e_i. All lines when X is empty.
IndexMask s_support(std::size_t i, std::span<const Labeling> x, const Apartment& ap);
Subspace compute_S(std::size_t i, std::span<const Labeling> x, const Apartment& ap);

struct InexactDecision {
  bool inexact = false;
  /// Set when inexact: X ⊆ A(+i,+j) ∪ A(-i,-j) with dim S_i >= 2 and e_j in S_i.
  std::optional<PairIndex> witness;
  std::vector<IndexMask> supports;  // S_i for every i
};

/// X is contained in some other apartment iff some S_i has dimension >= 2.
InexactDecision is_orthogonally_inexact(std::span<const Labeling> x, const Apartment& ap);

/// A(+i,+j) ∪ A(-i,-j) drawn from `members`, in their order.
std::vector<Labeling> type_one_set(PairIndex p, std::span<const Labeling> members);
/// The frame with e_i, e_j replaced by e_i + e_j and e_i - e_j.
Frame rotated_frame(const Frame& frame, PairIndex p);

/// A(+i,+j) ∪ A(-i,-j) is inexact and adding any other member makes it exact.
bool verify_maximal_inexact(PairIndex p, const Apartment& ap);
bool verify_maximal_inexact_serial(PairIndex p, const Apartment& ap);

/// n_count(A,B) == k^2. Throws ThresholdViolation when n < 4k.
bool decide_orthogonality_by_count(const Labeling& a, const Labeling& b, const Apartment& ap);

}  // namespace cpt
