#include "cpt/pair_scan.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include <omp.h>

#include "cpt/error.hpp"

namespace cpt {

namespace {

void visit_pair(const Apartment& ap, std::span<const Labeling> members, std::size_t p, std::size_t q,
                CountScan& out) {
  const std::size_t k = ap.rank();
  const Labeling& a = members[p];
  const Labeling& b = members[q];
  const std::size_t m = image_overlap(a, b);
  const std::size_t count = n_count(a, b, ap);
  const long long bound = lemma3_bound(static_cast<long long>(k), static_cast<long long>(m),
                                       static_cast<long long>(ap.n()));
  ++out.pairs_checked;
  ++out.histogram[m][count];
  if (static_cast<long long>(count) < bound) out.violations.push_back({p, q, m, count, bound, "lemma3-bound"});
  if (m == 0) {
    ++out.orthogonal_pairs;
    if (count == k * k) {
      ++out.orthogonal_at_k2;
    } else {
      out.violations.push_back({p, q, m, count, static_cast<long long>(k * k), "orthogonal-count"});
    }
  } else if (count == k * k) {
    ++out.nonorthogonal_at_k2;
    if (out.nonorthogonal_at_k2_examples.size() < kMaxReportedExamples) {
      out.nonorthogonal_at_k2_examples.emplace_back(p, q);
    }
  }
}

void merge_into(CountScan& total, CountScan&& part) {
  total.pairs_checked += part.pairs_checked;
  total.orthogonal_pairs += part.orthogonal_pairs;
  total.orthogonal_at_k2 += part.orthogonal_at_k2;
  total.nonorthogonal_at_k2 += part.nonorthogonal_at_k2;
  for (auto& e : part.nonorthogonal_at_k2_examples) total.nonorthogonal_at_k2_examples.push_back(e);
  for (auto& v : part.violations) total.violations.push_back(std::move(v));
  for (const auto& [m, counts] : part.histogram) {
    for (const auto& [c, f] : counts) total.histogram[m][c] += f;
  }
}

void finalize(CountScan& scan) {
  std::sort(scan.violations.begin(), scan.violations.end(),
            [](const PairViolation& x, const PairViolation& y) {
              return std::tie(x.first, x.second, x.kind) < std::tie(y.first, y.second, y.kind);
            });
  auto& ex = scan.nonorthogonal_at_k2_examples;
  std::sort(ex.begin(), ex.end());
  if (ex.size() > kMaxReportedExamples) ex.resize(kMaxReportedExamples);
}

void require_members(const Apartment& ap, std::span<const Labeling> members) {
  for (const auto& a : members) ap.require_member(a);
}

void require_threshold(const Apartment& ap) {
  if (ap.n() < 4 * ap.rank()) {
    throw ThresholdViolation("orthogonality by count needs n >= 4k (n=" + std::to_string(ap.n()) +
                             ", k=" + std::to_string(ap.rank()) + ")");
  }
}

}  // namespace

CountScan scan_counts_serial(const Apartment& ap, std::span<const Labeling> members) {
  require_members(ap, members);
  CountScan scan;
  for (std::size_t p = 0; p < members.size(); ++p) {
    for (std::size_t q = p + 1; q < members.size(); ++q) visit_pair(ap, members, p, q, scan);
  }
  finalize(scan);
  return scan;
}

CountScan scan_counts_parallel(const Apartment& ap, std::span<const Labeling> members) {
  require_members(ap, members);
  const auto size = static_cast<std::ptrdiff_t>(members.size());
  CountScan total;
#pragma omp parallel
  {
    CountScan local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::ptrdiff_t p = 0; p < size; ++p) {
      for (auto q = static_cast<std::size_t>(p) + 1; q < members.size(); ++q) {
        visit_pair(ap, members, static_cast<std::size_t>(p), q, local);
      }
    }
#pragma omp critical(cpt_scan_merge)
    merge_into(total, std::move(local));
  }
  finalize(total);
  return total;
}

OrthogonalityAgreement scan_orthogonality_serial(const Apartment& ap, std::span<const Labeling> members,
                                                 std::span<const SpectralOperator> operators) {
  require_threshold(ap);
  if (operators.size() != members.size()) throw InvalidArgument("one operator per member required");
  OrthogonalityAgreement out;
  for (std::size_t p = 0; p < members.size(); ++p) {
    for (std::size_t q = p + 1; q < members.size(); ++q) {
      const bool direct = orthogonal(operators[p], operators[q]);
      ++out.pairs_checked;
      if (direct) ++out.orthogonal_pairs;
      if (decide_orthogonality_by_count(members[p], members[q], ap) != direct) out.disagreements.emplace_back(p, q);
    }
  }
  return out;
}

OrthogonalityAgreement scan_orthogonality_parallel(const Apartment& ap, std::span<const Labeling> members,
                                                   std::span<const SpectralOperator> operators) {
  require_threshold(ap);
  if (operators.size() != members.size()) throw InvalidArgument("one operator per member required");
  const auto size = static_cast<std::ptrdiff_t>(members.size());
  OrthogonalityAgreement total;
#pragma omp parallel
  {
    OrthogonalityAgreement local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::ptrdiff_t sp = 0; sp < size; ++sp) {
      const auto p = static_cast<std::size_t>(sp);
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        const bool direct = orthogonal(operators[p], operators[q]);
        ++local.pairs_checked;
        if (direct) ++local.orthogonal_pairs;
        if (decide_orthogonality_by_count(members[p], members[q], ap) != direct) {
          local.disagreements.emplace_back(p, q);
        }
      }
    }
#pragma omp critical(cpt_orth_merge)
    {
      total.pairs_checked += local.pairs_checked;
      total.orthogonal_pairs += local.orthogonal_pairs;
      for (auto& d : local.disagreements) total.disagreements.push_back(d);
    }
  }
  std::sort(total.disagreements.begin(), total.disagreements.end());
  return total;
}

std::vector<SpectralOperator> materialize_members(const Apartment& ap, std::span<const Labeling> members) {
  require_members(ap, members);
  std::vector<std::optional<SpectralOperator>> slots(members.size());
  const auto size = static_cast<std::ptrdiff_t>(members.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t p = 0; p < size; ++p) {
    slots[static_cast<std::size_t>(p)].emplace(ap.to_operator(members[static_cast<std::size_t>(p)]));
  }
  std::vector<SpectralOperator> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace cpt
