#include <catch2/catch_amalgamated.hpp>

#include "encon/bipoly.hpp"
#include "encon/laurent.hpp"
#include "encon/rings.hpp"

using namespace encon;

TEST_CASE("integer and rational traits") {
  REQUIRE(RingTraits<Int>::is_zero(Int(0)));
  REQUIRE_FALSE(RingTraits<Int>::is_zero(Int(-3)));
  REQUIRE(*RingTraits<Int>::exact_div(Int(12), Int(-4)) == Int(-3));
  REQUIRE_FALSE(RingTraits<Int>::exact_div(Int(7), Int(2)).has_value());
  REQUIRE_THROWS_AS(RingTraits<Int>::exact_div(Int(1), Int(0)), std::domain_error);
  REQUIRE(*RingTraits<Rat>::exact_div(Rat(7), Rat(2)) == Rat(7, 2));
  REQUIRE(parse_rat("6/4") == Rat(3, 2));
  REQUIRE(RingTraits<Rat>::str(Rat(-3, 4)) == "-3/4");
}

TEST_CASE("laurent arithmetic and normalization") {
  const Laurent t = Laurent::variable();
  const Laurent p = Laurent(1) + t * t;          // 1 + t^2
  const Laurent q = Laurent::monomial(Int(1), -1);  // t^-1
  REQUIRE(p.lo() == 0);
  REQUIRE(p.hi() == 2);
  REQUIRE((p * q).lo() == -1);
  REQUIRE(p - p == Laurent());
  REQUIRE((p - p).is_zero());
  REQUIRE(Laurent(0, {Int(0), Int(0)}).is_zero());
  REQUIRE(Laurent(3, {Int(0), Int(2)}) == Laurent::monomial(Int(2), 4));
  REQUIRE(p.str() == "t^2+1");
  REQUIRE((-p).coeff(2) == Int(-1));
}

TEST_CASE("laurent exact division") {
  const Laurent t = Laurent::variable();
  const Laurent a = (Laurent(1) + t) * (Laurent(2) - t) * Laurent::monomial(Int(1), -3);
  const auto q = Laurent::divide(a, Laurent(1) + t);
  REQUIRE(q.has_value());
  REQUIRE(*q == (Laurent(2) - t) * Laurent::monomial(Int(1), -3));
  REQUIRE_FALSE(Laurent::divide(Laurent(1) + t, t).has_value());
  REQUIRE(Laurent::divide(t, Laurent(2)) == std::nullopt);  // 1/2 not integral
  REQUIRE_THROWS_AS(Laurent::divide(t, Laurent()), std::domain_error);
}

TEST_CASE("laurent evaluation") {
  const Laurent t = Laurent::variable();
  const Laurent p = Laurent(1) - (Laurent(1) + t) * Laurent::monomial(Int(1), -1);
  // 1 - (1+t)/t at t = 2 is -1/2
  REQUIRE(p.eval(Rat(2)) == Rat(-1, 2));
  REQUIRE_THROWS_AS(p.eval(Rat(0)), std::domain_error);
  REQUIRE((t * t).eval(Rat(-3)) == Rat(9));
}

TEST_CASE("bivariate polynomials") {
  const BiPoly t = BiPoly::var_t();
  const BiPoly h = BiPoly::var_h();
  const BiPoly p = BiPoly(1) + BiPoly(6) * t + BiPoly(16) * h * t;
  REQUIRE(p.multilinear());
  REQUIRE_FALSE((p * p).multilinear());
  REQUIRE(p.eval(Int(1), Int(1)) == Int(23));
  REQUIRE(p.eval(Int(0), Int(0)) == Int(1));
  REQUIRE(p.swap_vars() == BiPoly(1) + BiPoly(6) * h + BiPoly(16) * h * t);
  REQUIRE((p - p).is_zero());
  REQUIRE((t * h) == (h * t));
  REQUIRE((t + h) - h == t);
}
