// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include <doctest.h>

#include <random>

#include "cliquelab/error.hpp"
#include "cliquelab/polynomial.hpp"

using namespace cliquelab;

namespace {

Rational q(long num, long den = 1) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("normalization and accessors") {
  CHECK(IntPolynomial({1, 2, 0, 0}) == IntPolynomial({1, 2}));
  CHECK(IntPolynomial({0, 0}).is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial({5}).degree() == 0);
  CHECK(IntPolynomial({1, 2}).coeff(7) == 0);
  CHECK(IntPolynomial::monomial(3, 2) == IntPolynomial({0, 0, 3}));
  CHECK(IntPolynomial::one_plus_x() == IntPolynomial({1, 1}));
  CHECK(IntPolynomial({1, 6, 11, 7, 1}).to_string() == "[1,6,11,7,1]");
  CHECK(IntPolynomial{}.to_string() == "[]");
}

TEST_CASE("derivative") {
  CHECK(derivative(IntPolynomial({1, 3, 3, 1})) == IntPolynomial({3, 6, 3}));
  CHECK(derivative(IntPolynomial({5})).is_zero());
  CHECK(derivative(IntPolynomial({1, 6, 11, 7, 1})) == IntPolynomial({6, 22, 21, 4}));
}

TEST_CASE("ring operations and evaluation") {
  CHECK(add(IntPolynomial({1, 1}), IntPolynomial({1, 2})) == IntPolynomial({2, 3}));
  CHECK(multiply(IntPolynomial::one_plus_x(), IntPolynomial({1, 2})) == IntPolynomial({1, 3, 2}));
  CHECK(evaluate(IntPolynomial({1, 5, 6, 1}), q(-1)) == 1);
  CHECK(evaluate(IntPolynomial({1, 3, 2}), q(-1, 2)) == 0);
  CHECK(power(IntPolynomial::one_plus_x(), 4) == IntPolynomial({1, 4, 6, 4, 1}));
  CHECK(power(IntPolynomial({3, 1}), 0) == IntPolynomial({1}));
  CHECK(shift_up(IntPolynomial({1, 1}), 2) == IntPolynomial({0, 0, 1, 1}));
  CHECK((IntPolynomial({1, 1}) - IntPolynomial({1, 1})).is_zero());
  CHECK(multiply(IntPolynomial({1, 1}), IntPolynomial{}).is_zero());
  CHECK(multiply(IntPolynomial::one_plus_x(), IntPolynomial({1, 5, 6, 1})) == IntPolynomial({1, 6, 11, 7, 1}));
}

TEST_CASE("sign evaluation") {
  const IntPolynomial p({-1, 0, 1});
  CHECK(sign_at(p, q(0)) == -1);
  CHECK(sign_at(p, q(1)) == 0);
  CHECK(sign_at(p, q(3, 2)) == 1);
  CHECK(sign_at_infinity(p, true) == 1);
  CHECK(sign_at_infinity(IntPolynomial({0, 0, 0, 1}), true) == -1);
  CHECK(sign_at_infinity(IntPolynomial({0, 0, 0, 1}), false) == 1);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const IntPolynomial p = random_poly(rng, 6);
    const Rational x = q(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7 + 1));
    CHECK(sign_at(p, x) == sgn(evaluate(p, x)));
  }
}

TEST_CASE("content, primitive part, gcd, exact division") {
  CHECK(content(IntPolynomial({4, -6, 8})) == 2);
  CHECK(primitive_part(IntPolynomial({-4, 6, -8})) == IntPolynomial({2, -3, 4}));
  const IntPolynomial a = multiply(IntPolynomial({1, 1}), IntPolynomial({1, 2}));
  const IntPolynomial b = multiply(IntPolynomial({1, 1}), IntPolynomial({-3, 1}));
  CHECK(gcd(a, b) == IntPolynomial({1, 1}));
  CHECK(gcd(IntPolynomial({1, 2}), IntPolynomial({1, 3})) == IntPolynomial({1}));
  CHECK(divide_exact(a, IntPolynomial({1, 1})) == IntPolynomial({1, 2}));
  CHECK_FALSE(divide_exact(a, IntPolynomial({1, 3})).has_value());
  CHECK(multiplicity_of_minus_one(IntPolynomial({1, 4, 6, 4, 1})) == 4);
  CHECK(multiplicity_of_minus_one(IntPolynomial({1, 4, 5, 2})) == 2);
  CHECK(multiplicity_of_minus_one(IntPolynomial({1, 5, 6, 1})) == 0);
}

TEST_CASE("signed pseudo-remainder keeps the remainder sign") {
  // rem(x^2 - 1, 2x) = -1; with multiplier |lc|^2 = 4 the result is -4.
  const IntPolynomial r = signed_pseudo_remainder(IntPolynomial({-1, 0, 1}), IntPolynomial({0, 2}));
  REQUIRE(r.degree() == 0);
  CHECK(r.leading() < 0);
}

TEST_CASE("cauchy bound encloses all roots") {
  CHECK(cauchy_bound(IntPolynomial({-1, 0, 1})) == 2);
  CHECK(cauchy_bound(IntPolynomial({6, 0, 2})) == 4);
}

TEST_CASE("parsing") {
  CHECK(parse_polynomial("[1,6,11,7,1]") == IntPolynomial({1, 6, 11, 7, 1}));
  CHECK(parse_polynomial(" [ -1 , 0 , 1 ] ") == IntPolynomial({-1, 0, 1}));
  CHECK(parse_polynomial("[123456789012345678901234567890]").coeff(0) ==
        Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_polynomial("1,2"), Error);
  CHECK_THROWS_AS(parse_polynomial("[1,,2]"), Error);
  CHECK_THROWS_AS(parse_polynomial("[1,x]"), Error);
  CHECK(to_string(q(-3, 6)) == "-1/2");
  CHECK(to_string(q(4)) == "4");
}

TEST_CASE("derivative is linear") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const IntPolynomial a = random_poly(rng, 9);
    const IntPolynomial b = random_poly(rng, 9);
    CHECK(derivative(add(a, b)) == add(derivative(a), derivative(b)));
  }
}
