#include "doctest.h"

#include <algorithm>
#include <set>

#include "cpt/apartment.hpp"
#include "cpt/error.hpp"
#include "cpt/generators.hpp"
#include "test_support.hpp"

using namespace cpt;
using cpt::test::labels;

namespace {

Apartment standard(std::size_t n, std::vector<std::size_t> dims) {
  return Apartment::standard(class_with_dims(n, dims));
}

/// Brute force over every slot vector in {kernel, 0..m-1}^n.
std::vector<Labeling> brute_force_members(const Apartment& ap) {
  const std::size_t n = ap.n();
  const std::size_t m = ap.descriptor().slots();
  std::vector<Labeling> out;
  std::vector<int> slots(n, Labeling::kKernel);
  for (;;) {
    Labeling l(slots);
    if (ap.contains(l)) out.push_back(l);
    std::size_t pos = 0;
    while (pos < n && slots[pos] == static_cast<int>(m) - 1) slots[pos++] = Labeling::kKernel;
    if (pos == n) break;
    ++slots[pos];
  }
  return out;
}

/// C_ij membership evaluated on the operator with exact linear algebra.
bool oracle_in_c(const SpectralOperator& op, const Frame& frame, PairIndex p) {
  const Vector& ei = frame.direction(p.i);
  const Vector& ej = frame.direction(p.j);
  bool plus_plus = false;
  for (const auto& x : op.eigenspaces()) plus_plus = plus_plus || (x.contains(ei) && x.contains(ej));
  const Subspace kernel = orthogonal_complement(op.image());
  const bool minus_minus = kernel.contains(ei) && kernel.contains(ej);
  return !plus_plus && !minus_minus;
}

std::size_t oracle_n_count(const SpectralOperator& a, const SpectralOperator& b, const Frame& frame) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t j = i + 1; j < frame.size(); ++j) {
      if (oracle_in_c(a, frame, {i, j}) && oracle_in_c(b, frame, {i, j})) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("apartments") {

TEST_CASE("member_count examples and enumeration oracle") {
  CHECK(member_count(standard(4, {1, 1})) == 12);
  CHECK(member_count(standard(4, {2})) == 6);
  CHECK(member_count(standard(3, {3})) == 1);
  CHECK(member_count(standard(12, {1, 2})) == 660);
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{1, 1}, {2}, {1, 2}, {1, 1, 1}, {2, 2}, {3}}) {
    for (std::size_t n = 4; n <= 6; ++n) {
      const Apartment ap = standard(n, dims);
      auto oracle = brute_force_members(ap);
      auto listed = enumerate_members(ap);
      CHECK(listed.size() == oracle.size());
      CHECK(member_count(ap) == oracle.size());
      std::sort(oracle.begin(), oracle.end());
      std::sort(listed.begin(), listed.end());
      CHECK(listed == oracle);
    }
  }
}

TEST_CASE("enumerate_members examples") {
  const auto two = enumerate_members(standard(2, {1}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == labels({1, 0}));
  CHECK(two[1] == labels({0, 1}));

  const Apartment ap = standard(4, {1, 1});
  const auto members = enumerate_members(ap);
  CHECK(members.size() == 12);
  CHECK(std::set<Labeling>(members.begin(), members.end()).size() == 12);
  CHECK(members.front() == labels({1, 2, 0, 0}));
  CHECK(members[1] == labels({1, 0, 2, 0}));
  CHECK(members.back() == labels({0, 0, 2, 1}));
  CHECK(enumerate_members(ap) == members);
}

TEST_CASE("apartment members commute pairwise") {
  Rng rng(8);
  const Apartment ap(random_frame(4, rng), class_with_dims(4, {1, 1}));
  const auto members = enumerate_members(ap);
  std::vector<SpectralOperator> ops;
  for (const auto& m : members) ops.push_back(ap.to_operator(m));
  for (std::size_t p = 0; p < ops.size(); ++p) {
    CHECK(ap.label_of(ops[p]) == members[p]);
    for (std::size_t q = p + 1; q < ops.size(); ++q) CHECK(commutes(ops[p], ops[q]));
  }
}

TEST_CASE("membership checks") {
  const Apartment ap = standard(4, {1, 2});
  CHECK(ap.contains(labels({1, 2, 2, 0})));
  CHECK_FALSE(ap.contains(labels({1, 2, 0, 0})));
  CHECK_FALSE(ap.contains(labels({1, 2, 2})));
  CHECK_FALSE(ap.contains(labels({1, 3, 2, 2})));
  CHECK_THROWS_AS(n_count(labels({1, 2, 0, 0}), labels({1, 2, 2, 0}), ap), MembershipError);
  CHECK_THROWS_AS(ap.to_operator(labels({1, 1, 2, 0})), MembershipError);
}

TEST_CASE("set predicates examples") {
  const Labeling proj = labels({1, 1, 0, 0});
  CHECK(in_plus_plus(proj, {0, 1}));
  CHECK_FALSE(in_plus_plus(proj, {0, 2}));
  CHECK(in_minus_minus(proj, {2, 3}));
  CHECK_FALSE(in_minus_minus(proj, {1, 2}));
  CHECK_FALSE(in_minus_minus(proj, {0, 1}));

  for (const auto& member : enumerate_members(standard(4, {1, 1}))) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) CHECK_FALSE(in_plus_plus(member, {i, j}));
    }
  }

  const Labeling two = labels({1, 2, 0, 0});
  CHECK(in_plus_minus(two, 0, 1));
  CHECK(in_plus_minus(two, 0, 2));
  CHECK_FALSE(in_plus_minus(two, 2, 0));
  CHECK(in_orthocomplementary(two, {0, 1}));
  CHECK_FALSE(in_orthocomplementary(proj, {0, 1}));
  CHECK_FALSE(in_orthocomplementary(two, {2, 3}));

  CHECK_THROWS_AS(in_plus_plus(two, {0, 4}), InvalidArgument);
  CHECK_THROWS_AS(in_plus_minus(two, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(PairIndex(2, 2), InvalidArgument);
  CHECK(PairIndex(3, 1).i == 1);
}

TEST_CASE("union and complement forms of C_ij agree with the linear-algebra oracle") {
  Rng rng(21);
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{1, 2}, {2}, {1, 1, 1}}) {
    const Apartment ap(random_frame(5, rng), class_with_dims(5, dims));
    for (const auto& member : enumerate_members(ap)) {
      const SpectralOperator op = ap.to_operator(member);
      for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
          const PairIndex p(i, j);
          const bool union_form = in_orthocomplementary(member, p);
          CHECK(union_form == !(in_plus_plus(member, p) || in_minus_minus(member, p)));
          CHECK(union_form == oracle_in_c(op, ap.frame(), p));
        }
      }
    }
  }
}

TEST_CASE("projection classes: A(+i,-j) and A(+j,-i) are disjoint") {
  for (const auto& member : enumerate_members(standard(5, {2}))) {
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) CHECK_FALSE((in_plus_minus(member, i, j) && in_plus_minus(member, j, i)));
    }
  }
}

TEST_CASE("n_count examples") {
  const Apartment big = standard(12, {1, 2});
  const Labeling a = labels({1, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  const Labeling b = labels({0, 0, 0, 1, 2, 2, 0, 0, 0, 0, 0, 0});
  CHECK(n_count(a, b, big) == 9);

  const Apartment small = standard(8, {1, 1});
  CHECK(n_count(labels({1, 2, 0, 0, 0, 0, 0, 0}), labels({2, 1, 0, 0, 0, 0, 0, 0}), small) == 13);
}

TEST_CASE("n_count matches the linear-algebra oracle and the lower bound") {
  Rng rng(5);
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{1, 2}, {3}, {1, 1}}) {
    const std::size_t n = 7;
    const Apartment ap(random_frame(n, rng, false), class_with_dims(n, dims));
    for (int trial = 0; trial < 15; ++trial) {
      const Labeling a = random_member(ap, rng);
      const Labeling b = random_member(ap, rng);
      const std::size_t count = n_count(a, b, ap);
      CHECK(count == oracle_n_count(ap.to_operator(a), ap.to_operator(b), ap.frame()));
      const auto m = static_cast<long long>(image_overlap(a, b));
      CHECK(static_cast<long long>(count) >= lemma3_bound(static_cast<long long>(ap.rank()), m, n));
    }
  }
}

TEST_CASE("lemma3_bound and c_eval") {
  for (long long k = 0; k <= 5; ++k) {
    for (long long n = k; n <= 16; ++n) {
      CHECK(c_eval(0, k, n) == Rational(static_cast<long>(k * k)));
      for (long long m = 0; m <= k; ++m) CHECK(c_eval(Rational(static_cast<long>(m)), k, n) == Rational(static_cast<long>(lemma3_bound(k, m, n))));
    }
  }
  CHECK(lemma3_bound(3, 1, 10) == 9);
  CHECK(c_eval(1, 3, 10) == c_eval(0, 3, 10));
  CHECK(lemma3_bound(3, 1, 12) == 11);
  CHECK(c_eval(Rational(1, 2), 3, 10) == Rational(17, 2));
  CHECK_THROWS_AS(lemma3_bound(3, 4, 10), InvalidArgument);
  CHECK_THROWS_AS(lemma3_bound(3, -1, 10), InvalidArgument);
  CHECK_THROWS_AS(lemma3_bound(5, 1, 4), InvalidArgument);
  CHECK_THROWS_AS(c_eval(0, 5, 4), InvalidArgument);
}

TEST_CASE("compute_S examples") {
  const Apartment ap = standard(6, {1, 2});
  const auto members = enumerate_members(ap);
  for (std::size_t i = 0; i < 6; ++i) CHECK(compute_S(i, members, ap).dim() == 1);
  CHECK(compute_S(0, {}, ap) == Subspace::full(6));

  const auto type_one = type_one_set({0, 1}, members);
  const Subspace s1 = compute_S(0, type_one, ap);
  CHECK(s1.dim() >= 2);
  CHECK(s1.contains(ap.frame().direction(1)));
  CHECK(s1.contains(ap.frame().direction(0)));
  CHECK_THROWS_AS(compute_S(6, members, ap), InvalidArgument);
  const std::vector<Labeling> bad{labels({1, 0, 0, 0, 0, 0})};
  CHECK_THROWS_AS(compute_S(0, bad, ap), MembershipError);
}

TEST_CASE("compute_S agrees with explicit subspace intersections") {
  Rng rng(77);
  const Apartment ap(random_frame(5, rng), class_with_dims(5, {1, 2}));
  const auto members = enumerate_members(ap);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Labeling> x;
    for (const auto& m : members) {
      if (rng() % 6 == 0) x.push_back(m);
    }
    for (std::size_t i = 0; i < 5; ++i) {
      const Vector& ei = ap.frame().direction(i);
      Subspace expected = Subspace::full(5);
      for (const auto& l : x) {
        const SpectralOperator op = ap.to_operator(l);
        for (const auto& space : op.eigenspaces()) {
          if (space.contains(ei)) expected = intersect(expected, space);
        }
        const Subspace kernel = orthogonal_complement(op.image());
        if (kernel.contains(ei)) expected = intersect(expected, kernel);
      }
      CHECK(compute_S(i, x, ap) == expected);
    }
  }
}

TEST_CASE("is_orthogonally_inexact examples") {
  const Apartment ap = standard(6, {1, 2});
  const auto members = enumerate_members(ap);
  const auto type_one = type_one_set({0, 1}, members);
  const InexactDecision d = is_orthogonally_inexact(type_one, ap);
  CHECK(d.inexact);
  REQUIRE(d.witness);
  CHECK(*d.witness == PairIndex(0, 1));
  CHECK_FALSE(is_orthogonally_inexact(members, ap).inexact);
  const InexactDecision empty = is_orthogonally_inexact({}, ap);
  CHECK(empty.inexact);
  CHECK(empty.witness == PairIndex(0, 1));
  CHECK_FALSE(is_orthogonally_inexact({}, standard(1, {1})).inexact);
}

TEST_CASE("inexact witnesses are certified by the rotated apartment") {
  Rng rng(1234);
  const Apartment ap(random_frame(5, rng, false), class_with_dims(5, {1, 2}));
  const auto members = enumerate_members(ap);
  int inexact = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Labeling> x;
    const std::size_t keep = 1 + rng() % 6;
    for (const auto& m : members) {
      if (rng() % 60 < keep) x.push_back(m);
    }
    const InexactDecision d = is_orthogonally_inexact(x, ap);
    if (!d.inexact) {
      for (auto s : d.supports) CHECK(std::popcount(s) == 1);
      continue;
    }
    ++inexact;
    const PairIndex p = *d.witness;
    const Apartment other(rotated_frame(ap.frame(), p), ap.descriptor());
    for (const auto& l : x) {
      CHECK((in_plus_plus(l, p) || in_minus_minus(l, p)));
      CHECK(other.label_of(ap.to_operator(l)).has_value());
    }
  }
  CHECK(inexact > 5);
}

TEST_CASE("the rotated apartment meets the original exactly in the type (1) set") {
  const Apartment ap = standard(5, {1, 2});
  const auto members = enumerate_members(ap);
  for (const PairIndex p : {PairIndex(0, 1), PairIndex(2, 4)}) {
    const Apartment other(rotated_frame(ap.frame(), p), ap.descriptor());
    std::vector<Labeling> shared;
    for (const auto& m : members) {
      if (other.label_of(ap.to_operator(m))) shared.push_back(m);
    }
    CHECK(shared == type_one_set(p, members));
  }
}

TEST_CASE("verify_maximal_inexact") {
  for (const auto& [n, dims] : std::vector<std::pair<std::size_t, std::vector<std::size_t>>>{
           {8, {1, 1}}, {6, {2}}, {7, {1, 2}}}) {
    const Apartment ap = standard(n, dims);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        CHECK(verify_maximal_inexact({i, j}, ap));
        CHECK(verify_maximal_inexact_serial({i, j}, ap));
      }
    }
  }
  // A strict subset of a type (1) set stays inexact but is not what verify_maximal checks.
  const Apartment ap = standard(6, {2});
  auto subset = type_one_set({0, 1}, enumerate_members(ap));
  subset.pop_back();
  CHECK(is_orthogonally_inexact(subset, ap).inexact);
}

TEST_CASE("decide_orthogonality_by_count examples") {
  const Apartment ap = standard(12, {1, 2});
  const Labeling a = labels({1, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  const Labeling b = labels({0, 0, 0, 1, 2, 2, 0, 0, 0, 0, 0, 0});
  CHECK(decide_orthogonality_by_count(a, b, ap));

  // m = 1 in the projection class attains the bound c(1) = 11 exactly.
  const Apartment proj = standard(12, {3});
  const Labeling p = labels({1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  const Labeling q = labels({1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(decide_orthogonality_by_count(p, q, proj));
  CHECK(n_count(p, q, proj) == 11);
  CHECK(n_count(p, q, proj) == lemma3_bound(3, 1, 12));

  // With d = {1,2} the shared line sits in a different eigenspace from some
  // line of X \ Y, so the count exceeds the bound (13 > c(1) = 11).
  const Labeling c = labels({1, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(decide_orthogonality_by_count(a, c, ap));
  CHECK(n_count(a, c, ap) == 15);
  const Labeling c2 = labels({0, 2, 0, 1, 2, 0, 0, 0, 0, 0, 0, 0});
  CHECK(n_count(a, c2, ap) == 13);
  CHECK(n_count(a, c2, ap) > lemma3_bound(3, 1, 12));

  CHECK_THROWS_AS(decide_orthogonality_by_count(labels({1, 2, 2, 0, 0, 0, 0, 0, 0, 0}),
                                                labels({0, 0, 0, 1, 2, 2, 0, 0, 0, 0}), standard(10, {1, 2})),
                  ThresholdViolation);
}

TEST_CASE("n_count does not depend on which apartment holds the pair") {
  // Empirical: A, B fixed, apartments differ by rotations inside blocks of
  // the partition generated by their eigenspaces.
  const Apartment ap = standard(8, {1, 2});
  const Labeling a = labels({1, 2, 2, 0, 0, 0, 0, 0});
  const Labeling b = labels({0, 2, 0, 1, 2, 0, 0, 0});
  const SpectralOperator opa = ap.to_operator(a);
  const SpectralOperator opb = ap.to_operator(b);
  std::vector<Subspace> family = opa.eigenspaces();
  family.insert(family.end(), opb.eigenspaces().begin(), opb.eigenspaces().end());
  const Frame refined = refine_to_frame(8, family);

  std::vector<Frame> frames{ap.frame(), refined, rotated_frame(refined, {5, 6}), rotated_frame(refined, {6, 7})};
  frames.push_back(rotated_frame(frames.back(), {5, 7}));
  const std::size_t reference = n_count(a, b, ap);
  for (const auto& f : frames) {
    const Apartment other(f, ap.descriptor());
    const auto la = other.label_of(opa);
    const auto lb = other.label_of(opb);
    REQUIRE(la.has_value());
    REQUIRE(lb.has_value());
    CHECK(n_count(*la, *lb, other) == reference);
  }
  MESSAGE("n_count(A,B) = " << reference << " in all " << frames.size() << " apartments");
}

}  // TEST_SUITE
