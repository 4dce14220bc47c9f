#include "doctest.h"

#include <algorithm>

#include "cpt/error.hpp"
#include "cpt/generators.hpp"
#include "cpt/subspace.hpp"
#include "test_support.hpp"

using namespace cpt;
using cpt::test::e;
using cpt::test::rows;
using cpt::test::span;
using cpt::test::vec;

TEST_SUITE("exact_linalg") {

TEST_CASE("scalar text format") {
  CHECK(Scalar::parse("3") == Scalar(3));
  CHECK(Scalar::parse("2/4") == Scalar(Rational(1, 2)));
  CHECK(Scalar::parse(" -1 / 2 ") == Scalar(Rational(-1, 2)));
  CHECK(Scalar::parse("1/2+3/4i") == Scalar(Rational(1, 2), Rational(3, 4)));
  CHECK(Scalar::parse("1/2 - 3/4 i") == Scalar(Rational(1, 2), Rational(-3, 4)));
  CHECK(Scalar::parse("i") == Scalar(0, 1));
  CHECK(Scalar::parse("-i") == Scalar(0, -1));
  CHECK(Scalar::parse("+2i") == Scalar(0, 2));
  CHECK(Scalar::parse("5/3 i") == Scalar(0, Rational(5, 3)));

  CHECK(Scalar(Rational(1, 2), Rational(-3, 4)).str() == "1/2-3/4 i");
  CHECK(Scalar(0, 1).str() == "1 i");
  CHECK(Scalar(Rational(-7, 3)).str() == "-7/3");

  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1.5"), ParseError);
}

TEST_CASE("scalar text round trip") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational re(static_cast<long>(rng() % 41) - 20, static_cast<unsigned long>(rng() % 9 + 1));
    const Rational im(static_cast<long>(rng() % 41) - 20, static_cast<unsigned long>(rng() % 9 + 1));
    const Scalar s(re, im);
    CHECK(Scalar::parse(s.str()) == s);
  }
}

TEST_CASE("scalar field operations") {
  const Scalar z(Rational(1, 2), Rational(-2, 3));
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).is_real());
  CHECK((z * z.conj()).re() == z.norm());
  CHECK_THROWS_AS(Scalar(0).inverse(), InvalidArgument);
}

TEST_CASE("matrix elimination") {
  const Matrix m = rows({{"1", "2", "3"}, {"2", "4", "6"}, {"0", "1", "i"}});
  CHECK(m.rank() == 2);
  const auto kernel = m.kernel_basis();
  REQUIRE(kernel.size() == 1);
  CHECK(is_zero(m * kernel[0]));
  CHECK(m.adjoint().adjoint() == m);
  const Matrix inv = rows({{"1", "i"}, {"0", "2"}}).inverse();
  CHECK(rows({{"1", "i"}, {"0", "2"}}) * inv == Matrix::identity(2));
  CHECK_THROWS_AS(rows({{"1", "2"}, {"2", "4"}}).inverse(), InvalidArgument);
}

TEST_CASE("projection_of examples") {
  CHECK(span(2, {e(2, 1)}).projection() == rows({{"1", "0"}, {"0", "0"}}));
  CHECK(span(2, {vec({1, 1})}).projection() == rows({{"1/2", "1/2"}, {"1/2", "1/2"}}));
  CHECK(span(3, {}).projection() == Matrix(3, 3));
  CHECK(span(3, {}).dim() == 0);
  CHECK_THROWS_AS(span(3, {vec({1, 0})}), DimensionMismatch);
}

TEST_CASE("intersect examples") {
  const Subspace x = span(4, {e(4, 1), e(4, 2)});
  const Subspace y = span(4, {e(4, 2), e(4, 3)});
  CHECK(intersect(x, x) == x);
  CHECK(intersect(x, y) == span(4, {e(4, 2)}));
  CHECK(intersect(x, span(4, {e(4, 3), e(4, 4)})).is_zero());
  CHECK_THROWS_AS(intersect(x, span(3, {e(3, 1)})), DimensionMismatch);
}

TEST_CASE("sum examples") {
  const Subspace x = span(3, {e(3, 1)});
  CHECK(sum(x, Subspace::zero(3)) == x);
  CHECK(sum(x, span(3, {e(3, 2)})) == span(3, {e(3, 1), e(3, 2)}));
  CHECK(sum(x, span(3, {vec({1, 1, 0})})) == span(3, {e(3, 1), e(3, 2)}));
  CHECK_THROWS_AS(sum(x, Subspace::zero(2)), DimensionMismatch);
}

TEST_CASE("complement_within examples") {
  const Subspace plane = span(2, {e(2, 1), e(2, 2)});
  CHECK(complement_within(Subspace::zero(2), plane) == plane);
  CHECK(complement_within(span(2, {e(2, 1)}), plane) == span(2, {e(2, 2)}));
  CHECK(complement_within(span(2, {vec({1, 1})}), plane) == span(2, {vec({1, -1})}));
  CHECK_THROWS_AS(complement_within(plane, Subspace::zero(3)), DimensionMismatch);
}

TEST_CASE("from_projection rejects non-projections") {
  CHECK_THROWS_AS(Subspace::from_projection(rows({{"1", "1"}, {"0", "0"}})), InvalidArgument);
  CHECK_THROWS_AS(Subspace::from_projection(rows({{"2", "0"}, {"0", "0"}})), InvalidArgument);
  CHECK(Subspace::from_projection(rows({{"1/2", "1/2"}, {"1/2", "1/2"}})).dim() == 1);
}

namespace {

std::vector<Vector> random_vectors(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<Vector> out(count, Vector(n));
  for (auto& v : out) {
    for (auto& x : v) {
      const long re = static_cast<long>(rng() % 5) - 2;
      const long im = rng() % 3 == 0 ? static_cast<long>(rng() % 3) - 1 : 0;
      x = Scalar(Rational(re), Rational(im));
    }
  }
  return out;
}

void check_projection_invariants(const Subspace& x) {
  const Matrix& p = x.projection();
  CHECK(p * p == p);
  CHECK(p == p.adjoint());
  const Scalar t = p.trace();
  CHECK(t.is_real());
  CHECK(t.re() == static_cast<long>(x.dim()));
}

}  // namespace

TEST_CASE("subspace invariants on random inputs") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Subspace x = projection_of(n, random_vectors(n, rng() % (n + 1), rng));
    const Subspace y = projection_of(n, random_vectors(n, rng() % (n + 1), rng));
    const Subspace meet = intersect(x, y);
    const Subspace join = sum(x, y);
    const Subspace rest = complement_within(x, y);
    for (const Subspace* s : {&x, &y, &meet, &join, &rest}) check_projection_invariants(*s);

    CHECK(x.dim() + y.dim() == join.dim() + meet.dim());
    CHECK(x.dim() + orthogonal_complement(x).dim() == n);
    CHECK(complement_within(x, Subspace::full(n)) == orthogonal_complement(x));
    CHECK(x.contains(meet));
    CHECK(y.contains(meet));
    CHECK(join.contains(x));
    CHECK(join.contains(y));
    CHECK(y.contains(rest));
    CHECK(rest.orthogonal_to(x));
  }
}

TEST_CASE("projection_of is basis independent") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const auto spanning = random_vectors(n, 1 + rng() % n, rng);
    // Unit upper-triangular recombination keeps the span.
    std::vector<Vector> mixed = spanning;
    for (std::size_t a = 0; a < mixed.size(); ++a) {
      for (std::size_t b = a + 1; b < spanning.size(); ++b) {
        const Scalar c(static_cast<long>(rng() % 7) - 3);
        for (std::size_t r = 0; r < n; ++r) mixed[a][r] += c * spanning[b][r];
      }
    }
    std::reverse(mixed.begin(), mixed.end());
    CHECK(projection_of(n, spanning) == projection_of(n, mixed));
  }
}

TEST_CASE("gram_schmidt yields orthogonal spanning vectors") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Subspace x = projection_of(n, random_vectors(n, 1 + rng() % n, rng));
    const auto basis = orthogonal_basis(x);
    CHECK(basis.size() == x.dim());
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) CHECK(inner(basis[a], basis[b]).is_zero());
    }
    CHECK(projection_of(n, basis) == x);
  }
}

}  // TEST_SUITE
