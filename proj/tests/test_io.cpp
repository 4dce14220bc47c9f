#include "doctest.h"

#include "cpt/error.hpp"
#include "cpt/generators.hpp"
#include "cpt/io.hpp"
#include "test_support.hpp"

using namespace cpt;
using cpt::io::json;
using cpt::test::e;
using cpt::test::labels;
using cpt::test::span;

TEST_SUITE("io") {

TEST_CASE("class and operator round trip") {
  Rng rng(3);
  const ClassDescriptor c(5, {Rational(1, 2), Rational(-3)}, {1, 2});
  CHECK(io::class_from_json(io::to_json(c)) == c);
  CHECK(io::to_json(c)["alphas"] == json::array({"1/2", "-3"}));
  for (int trial = 0; trial < 10; ++trial) {
    const SpectralOperator a = random_operator(c, rng);
    const json j = json::parse(io::to_json(a).dump());
    CHECK(io::operator_from_json(j) == a);
  }
}

TEST_CASE("scalars accept strings and integers") {
  CHECK(io::scalar_from_json(json(3)) == Scalar(3));
  CHECK(io::scalar_from_json(json("1/2-i")) == Scalar(Rational(1, 2), Rational(-1)));
  CHECK_THROWS_AS(io::scalar_from_json(json("x")), ParseError);
  CHECK_THROWS_AS(io::scalar_from_json(json(1.5)), ParseError);
}

TEST_CASE("family file forms") {
  const auto bare = io::family_from_json(json::parse(R"([[[1,0,0]], [[0,1,0],[0,0,1]]])"));
  CHECK(bare.n == 3);
  REQUIRE(bare.family.size() == 2);
  CHECK(bare.family[1] == span(3, {e(3, 2), e(3, 3)}));

  const auto wrapped = io::family_from_json(json::parse(R"({"n": 3, "family": [[], [["0","i","0"]]]})"));
  CHECK(wrapped.family[0].is_zero());
  CHECK(wrapped.family[1] == span(3, {e(3, 2)}));

  CHECK_THROWS_AS(io::family_from_json(json::parse(R"([[[1,0]], [[1,0,0]]])")), DimensionMismatch);
  CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"family": 3})")), ParseError);
}

TEST_CASE("labelings are 1-based on the wire") {
  const Labeling a = labels({1, 0, 2, 2});
  CHECK(io::to_json(a) == json::array({1, 0, 2, 2}));
  CHECK(io::labeling_from_json(json::array({1, 0, 2, 2})) == a);
  CHECK_THROWS_AS(io::labeling_from_json(json::array({-1})), ParseError);

  const auto file = io::member_set_from_json(json::parse(
      R"({"class": {"n": 4, "alphas": ["1", "2"], "dims": [1, 1]}, "members": [[1,2,0,0],[0,0,1,2]]})"));
  CHECK(file.cls.n() == 4);
  CHECK_FALSE(file.frame.has_value());
  CHECK(file.members.size() == 2);
}

TEST_CASE("frame round trip") {
  Rng rng(11);
  const Frame f = random_frame(4, rng);
  CHECK(io::frame_from_json(io::to_json(f)).directions() == f.directions());
  CHECK_THROWS(io::frame_from_json(json::parse(R"({"n": 2, "lines": [[1,1],[1,0]]})")));
}

}  // TEST_SUITE
