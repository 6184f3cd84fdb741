// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include <doctest.h>

#include <algorithm>
#include <random>

#include "cliquelab/error.hpp"
#include "cliquelab/roots.hpp"
#include "constructed.hpp"

using namespace cliquelab;

namespace {

Rational q(long num, long den = 1) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

bool brackets(const ExtendedRoot& r, const Rational& x) {
  if (r.is_negative_infinity()) return false;
  const auto& a = r.algebraic();
  return a.lo < x && x <= a.hi;
}

Rational as_rational(const ExtendedRoot& r) {
  auto v = exact_rational(r.algebraic());
  REQUIRE(v.has_value());
  return *v;
}

}  // namespace

TEST_CASE("square-free decomposition") {
  using V = std::vector<SquareFreeFactor>;
  CHECK(square_free_decomposition(IntPolynomial({1, 2, 1})) == V{{IntPolynomial({1, 1}), 2}});
  CHECK(square_free_decomposition(IntPolynomial({1, 3, 2})) == V{{IntPolynomial({1, 3, 2}), 1}});
  CHECK(square_free_decomposition(IntPolynomial({1, 4, 5, 2})) ==
        V{{IntPolynomial({1, 2}), 1}, {IntPolynomial({1, 1}), 2}});
  CHECK(square_free_decomposition(IntPolynomial({7})).empty());
  CHECK_THROWS_AS(square_free_decomposition(IntPolynomial{}), Error);
}

TEST_CASE("square-free reconstruction matches the primitive part") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    constructed::Polynomial c = constructed::make(rng);
    // Force repeated factors.
    const IntPolynomial p = c.poly * c.poly * IntPolynomial({3, 3});
    IntPolynomial rebuilt({1});
    const auto parts = square_free_decomposition(p);
    for (std::size_t a = 0; a < parts.size(); ++a) {
      CHECK(derivative(parts[a].factor).degree() >= 0);
      CHECK(gcd(parts[a].factor, derivative(parts[a].factor)).degree() == 0);
      for (std::size_t b = a + 1; b < parts.size(); ++b) {
        CHECK(gcd(parts[a].factor, parts[b].factor).degree() == 0);
      }
      rebuilt = rebuilt * power(parts[a].factor, parts[a].multiplicity);
    }
    CHECK(rebuilt == primitive_part(p));
  }
}

TEST_CASE("sturm chains") {
  const SturmChain c = sturm_chain(IntPolynomial({-1, 0, 1}));
  REQUIRE(c.size() == 3);
  CHECK(c.back().degree() == 0);
  CHECK(c.back().leading() > 0);
  const auto inf_diff = [](const IntPolynomial& p) {
    const SturmChain s = sturm_chain(p);
    return sign_variations(s, Endpoint::minus_infinity()) - sign_variations(s, Endpoint::plus_infinity());
  };
  CHECK(inf_diff(IntPolynomial({1, 0, 1})) == 0);
  CHECK(inf_diff(IntPolynomial({0, -1, 0, 1})) == 3);
  CHECK_THROWS_AS(sturm_chain(IntPolynomial({1, 2, 1})), Error);
  CHECK_THROWS_AS(sturm_chain(IntPolynomial{}), Error);
}

TEST_CASE("root counting on half-open intervals") {
  const IntPolynomial p({-1, 0, 1});
  CHECK(count_real_roots(p, Endpoint::minus_infinity(), Endpoint::at(0)) == 1);
  CHECK(count_real_roots(IntPolynomial({1, 5, 6, 1}), Endpoint::minus_infinity(), Endpoint::plus_infinity()) == 3);
  CHECK(count_real_roots(IntPolynomial({1, 0, 1}), Endpoint::at(-100), Endpoint::at(100)) == 0);
  // Endpoints that are roots: (lo, hi] counts the right end only.
  CHECK(count_real_roots(p, Endpoint::at(-1), Endpoint::at(1)) == 1);
  CHECK(count_real_roots(p, Endpoint::at(-2), Endpoint::at(-1)) == 1);
  CHECK(count_real_roots(p, Endpoint::at(-1), Endpoint::at(0)) == 0);
  CHECK_THROWS_AS(count_real_roots(p, Endpoint::at(1), Endpoint::at(0)), Error);
}

TEST_CASE("isolation") {
  const RootReport r = isolate_real_roots(IntPolynomial({1, 3, 2}));
  CHECK(r.is_real_rooted);
  REQUIRE(r.roots.size() == 2);
  CHECK(as_rational(r.roots[0]) == q(-1, 2));
  CHECK(as_rational(r.roots[1]) == -1);

  const RootReport w = isolate_real_roots(IntPolynomial({1, 6, 11, 7, 1}));
  CHECK(w.is_real_rooted);
  CHECK(w.real_count_with_multiplicity == 4);
  CHECK(w.roots.size() == 4);

  const RootReport none = isolate_real_roots(IntPolynomial({1, 1, 1}));
  CHECK_FALSE(none.is_real_rooted);
  CHECK(none.roots.empty());
  CHECK(none.real_count_with_multiplicity == 0);

  const RootReport c = isolate_real_roots(IntPolynomial({5}));
  CHECK(c.is_real_rooted);
  CHECK(c.degree == 0);
  CHECK_THROWS_AS(isolate_real_roots(IntPolynomial{}), Error);

  const RootReport dbl = isolate_real_roots(IntPolynomial({1, 4, 4}));
  REQUIRE(dbl.roots.size() == 1);
  CHECK(dbl.roots[0].multiplicity() == 2);
  CHECK(equals_rational(dbl.roots[0], q(-1, 2)));
  CHECK(approximate(dbl.roots[0]) == "-0.5");
}

TEST_CASE("top two roots") {
  auto [R, r] = top_two_roots(IntPolynomial({1, 3, 2}));
  CHECK(equals_rational(R, q(-1, 2)));
  CHECK(equals_rational(r, q(-1)));
  auto [R1, r1] = top_two_roots(IntPolynomial({1, 1}));
  CHECK(equals_rational(R1, q(-1)));
  CHECK(r1.is_negative_infinity());
  CHECK(approximate(r1) == "-inf");
  auto [R2, r2] = top_two_roots(IntPolynomial({1, 2, 1}));
  CHECK(equals_rational(R2, q(-1)));
  CHECK(equals_rational(r2, q(-1)));
  CHECK_THROWS_AS(top_two_roots(IntPolynomial({1, 0, 1})), Error);
  try {
    top_two_roots(IntPolynomial({1, 0, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoRealRoot);
  }

  const RootReport rep = isolate_real_roots(IntPolynomial({4, -4, 1}) * IntPolynomial({-1, 0, 1}));
  auto [Rd, rd] = top_two_distinct_roots(rep);
  CHECK(equals_rational(Rd, q(2)));
  CHECK(equals_rational(rd, q(1)));
}

TEST_CASE("comparing algebraic numbers") {
  CHECK(compare_roots(ExtendedRoot(), ExtendedRoot::from_rational(-1)) == std::strong_ordering::less);
  CHECK(compare_roots(ExtendedRoot(), ExtendedRoot()) == std::strong_ordering::equal);
  const auto a = isolate_real_roots(IntPolynomial({1, 2})).roots[0];
  const auto b = isolate_real_roots(IntPolynomial({1, 4, 4})).roots[0];
  CHECK(compare_roots(a, b) == std::strong_ordering::equal);
  const auto s2 = isolate_real_roots(IntPolynomial({-2, 0, 1})).roots[0];
  const auto s3 = isolate_real_roots(IntPolynomial({-3, 0, 1})).roots[0];
  CHECK(compare_roots(s2, s3) == std::strong_ordering::less);
  CHECK(compare_roots(s3, s2) == std::strong_ordering::greater);
  // sqrt(2) as a root of two different defining polynomials.
  const auto s2b = isolate_real_roots(IntPolynomial({-2, 0, 1}) * IntPolynomial({1, 0, 1, 1})).roots[0];
  const auto s2c = isolate_real_roots(IntPolynomial({4, 0, -4, 0, 1}) * IntPolynomial({3, 1})).roots;
  CHECK(compare_roots(s2, s2b) == std::strong_ordering::equal);
  CHECK(std::any_of(s2c.begin(), s2c.end(),
                    [&](const ExtendedRoot& x) { return compare_roots(x, s2) == std::strong_ordering::equal; }));
  // Close but distinct: sqrt(2) vs 1414213562373/10^12.
  const auto close = ExtendedRoot::from_rational(q(1414213562373, 1000000000000));
  CHECK(compare_roots(close, s2) == std::strong_ordering::less);
}

TEST_CASE("constructed polynomials: counts and brackets") {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 1000; ++i) {
    const constructed::Polynomial c = constructed::make(rng);
    const RootReport rep = isolate_real_roots(c.poly);
    REQUIRE(rep.real_count_with_multiplicity == c.real_count);
    CHECK(real_root_count_with_multiplicity(c.poly) == c.real_count);
    CHECK(rep.is_real_rooted == (c.real_count == c.poly.degree()));
    int total = 0;
    for (std::size_t k = 0; k < rep.roots.size(); ++k) {
      total += rep.roots[k].multiplicity();
      const auto& a = rep.roots[k].algebraic();
      CHECK(count_real_roots(a.defining, Endpoint::at(a.lo), Endpoint::at(a.hi)) == 1);
      if (k + 1 < rep.roots.size()) {
        CHECK(compare_roots(rep.roots[k], rep.roots[k + 1]) == std::strong_ordering::greater);
      }
    }
    CHECK(total == c.real_count);
    for (const Rational& root : c.rational_roots) {
      const int hits = static_cast<int>(
          std::count_if(rep.roots.begin(), rep.roots.end(), [&](const ExtendedRoot& r) { return brackets(r, root); }));
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("real-rootedness is multiplicative") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const IntPolynomial p = constructed::make(rng).poly;
    const IntPolynomial q = constructed::make(rng).poly;
    CHECK(is_real_rooted(p * q) == (is_real_rooted(p) && is_real_rooted(q)));
  }
}
