// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cliquelab/polynomial.hpp"

namespace cliquelab {

struct SquareFreeFactor {
  IntPolynomial factor;  // primitive, square-free, positive leading coefficient
  int multiplicity = 1;

  friend bool operator==(const SquareFreeFactor&, const SquareFreeFactor&) = default;
};

/// Yun's algorithm over Z with content stripping. Factors of positive
/// degree only, by increasing multiplicity. Throws Error(kZeroPolynomial).
std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p);

using SturmChain = std::vector<IntPolynomial>;

/// p, p', then negated signed pseudo-remainders divided by their content.
/// Throws Error(kNotSquareFree) when gcd(p, p') is not constant and
/// Error(kZeroPolynomial) for p = 0.
SturmChain sturm_chain(const IntPolynomial& p);

/// Interval endpoint: a rational, or an infinity of the given sign.
struct Endpoint {
  std::optional<Rational> value;
  bool positive = false;  // meaningful only when value is empty

  static Endpoint minus_infinity() { return {std::nullopt, false}; }
  static Endpoint plus_infinity() { return {std::nullopt, true}; }
  static Endpoint at(Rational q) { return {std::move(q), false}; }
};

/// Sign variations of the chain at a point, zeros dropped.
int sign_variations(const SturmChain& chain, const Endpoint& x);

/// Distinct real roots of a square-free p in (lo, hi]. Because zeros are
/// dropped when counting variations, the half-open count is exact even
/// when an endpoint is itself a root.
int count_real_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi);
int count_real_roots(const IntPolynomial& square_free, const Endpoint& lo, const Endpoint& hi);

/// Real algebraic number: the unique root of `defining` in (lo, hi].
struct AlgebraicRoot {
  IntPolynomial defining;
  Rational lo;
  Rational hi;
  int multiplicity = 1;
};

struct NegativeInfinity {
  friend bool operator==(NegativeInfinity, NegativeInfinity) { return true; }
};

class ExtendedRoot {
 public:
  ExtendedRoot() = default;  // NegativeInfinity
  ExtendedRoot(NegativeInfinity) {}
  ExtendedRoot(AlgebraicRoot root) : value_(std::move(root)) {}

  /// The rational q as a root of den·x - num, multiplicity 1.
  static ExtendedRoot from_rational(const Rational& q);

  bool is_negative_infinity() const { return std::holds_alternative<NegativeInfinity>(value_); }
  const AlgebraicRoot& algebraic() const { return std::get<AlgebraicRoot>(value_); }
  AlgebraicRoot& algebraic() { return std::get<AlgebraicRoot>(value_); }
  int multiplicity() const { return is_negative_infinity() ? 0 : algebraic().multiplicity; }

 private:
  std::variant<NegativeInfinity, AlgebraicRoot> value_;
};

/// Halves the isolating interval, keeping the half that holds the root.
void refine(AlgebraicRoot& root);

/// Exact order of two extended roots. NegativeInfinity sits below every
/// algebraic number and equals itself. Multiplicity is ignored.
std::strong_ordering compare_roots(const ExtendedRoot& a, const ExtendedRoot& b);

/// Exact rational value if the root is rational, found by searching the
/// defining polynomial's linear factor.
std::optional<Rational> exact_rational(const AlgebraicRoot& root);
bool equals_rational(const ExtendedRoot& root, const Rational& q);

/// Decimal approximation with 12 significant digits ("-inf" for NegativeInfinity).
std::string approximate(const ExtendedRoot& root);

struct RootReport {
  IntPolynomial poly;
  int degree = 0;
  int real_count_with_multiplicity = 0;
  bool is_real_rooted = false;
  std::vector<ExtendedRoot> roots;  // distinct roots, descending
};

/// Square-free decomposition, Sturm bisection within the Cauchy bound,
/// merge across factors with refinement until intervals are disjoint.
/// Throws Error(kZeroPolynomial).
RootReport isolate_real_roots(const IntPolynomial& p);

/// Real roots counted with multiplicity, without isolating them.
int real_root_count_with_multiplicity(const IntPolynomial& p);
/// Degree-0 polynomials are real-rooted. Throws Error(kZeroPolynomial).
bool is_real_rooted(const IntPolynomial& p);

/// Largest and second largest real roots counted with multiplicity. A
/// multiple largest root is its own runner-up; a single simple real root
/// leaves the second as NegativeInfinity. Throws Error(kNoRealRoot).
std::pair<ExtendedRoot, ExtendedRoot> top_two_roots(const IntPolynomial& p);
std::pair<ExtendedRoot, ExtendedRoot> top_two_roots(const RootReport& report);

/// Largest and second largest *distinct* real roots.
std::pair<ExtendedRoot, ExtendedRoot> top_two_distinct_roots(const RootReport& report);

}  // namespace cliquelab
