#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cpt/apartment.hpp"

namespace cpt {

/// overlap m -> (n_count -> number of unordered member pairs)
using CountHistogram = std::map<std::size_t, std::map<std::size_t, std::uint64_t>>;

struct PairViolation {
  std::size_t first;   // member indices, first < second
  std::size_t second;
  std::size_t overlap;
  std::size_t count;
  long long expected;  // lower bound, or k^2 for orthogonal pairs
  std::string kind;    // "lemma3-bound" | "orthogonal-count"
  friend bool operator==(const PairViolation&, const PairViolation&) = default;
};

/// Result of scanning every unordered pair of distinct apartment members.
struct CountScan {
  std::uint64_t pairs_checked = 0;
  std::uint64_t orthogonal_pairs = 0;
  std::uint64_t orthogonal_at_k2 = 0;
  /// Non-orthogonal pairs whose count equals k^2 (the ambiguous case below n = 4k).
  std::uint64_t nonorthogonal_at_k2 = 0;
  std::vector<std::pair<std::size_t, std::size_t>> nonorthogonal_at_k2_examples;  // first few, sorted
  std::vector<PairViolation> violations;  // sorted by (first, second)
  CountHistogram histogram;
  friend bool operator==(const CountScan&, const CountScan&) = default;
};

inline constexpr std::size_t kMaxReportedExamples = 8;

/// Checks n_count >= (k-m)^2 + m(n-2k+m) on every pair and n_count == k^2 on
/// orthogonal pairs, and tabulates counts by overlap.
CountScan scan_counts_serial(const Apartment& ap, std::span<const Labeling> members);
CountScan scan_counts_parallel(const Apartment& ap, std::span<const Labeling> members);

struct OrthogonalityAgreement {
  std::uint64_t pairs_checked = 0;
  std::uint64_t orthogonal_pairs = 0;
  std::vector<std::pair<std::size_t, std::size_t>> disagreements;  // sorted
  friend bool operator==(const OrthogonalityAgreement&, const OrthogonalityAgreement&) = default;
};

/// Compares decide_orthogonality_by_count with the operator-level orthogonal()
/// predicate on every unordered member pair. `operators[p]` must be the
/// operator of `members[p]`. Throws ThresholdViolation when n < 4k.
OrthogonalityAgreement scan_orthogonality_serial(const Apartment& ap, std::span<const Labeling> members,
                                                 std::span<const SpectralOperator> operators);
OrthogonalityAgreement scan_orthogonality_parallel(const Apartment& ap, std::span<const Labeling> members,
                                                   std::span<const SpectralOperator> operators);

/// Apartment operators for every member, built in parallel.
std::vector<SpectralOperator> materialize_members(const Apartment& ap, std::span<const Labeling> members);

}  // namespace cpt
