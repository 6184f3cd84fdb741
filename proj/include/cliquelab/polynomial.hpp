// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliquelab {

using Integer = mpz_class;
/// GMP keeps mpq_class canonical: positive denominator, reduced.
using Rational = mpq_class;

std::string to_string(const Integer& z);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  /// c·x^k
  static IntPolynomial monomial(const Integer& c, int k);
  /// 1 + x
  static IntPolynomial one_plus_x();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  Integer coeff(int k) const;
  const Integer& leading() const { return coeffs_.back(); }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& q);
  IntPolynomial& operator-=(const IntPolynomial& q);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q) { return p += q; }
  friend IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q) { return p -= q; }
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(IntPolynomial p, const Integer& c) { return p *= c; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Coefficient list form, e.g. "[1,6,11,7,1]"; the zero polynomial is "[]".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial power(const IntPolynomial& p, int e);
IntPolynomial derivative(const IntPolynomial& p);
/// p(x) · x^k
IntPolynomial shift_up(const IntPolynomial& p, int k);

Rational evaluate(const IntPolynomial& p, const Rational& x);
/// Sign of p(x) in {-1, 0, 1}, computed without forming p(x).
int sign_at(const IntPolynomial& p, const Rational& x);
/// Sign of p at +infinity (or -infinity when `negative`); 0 for zero.
int sign_at_infinity(const IntPolynomial& p, bool negative);

/// Non-negative gcd of the coefficients; 0 for the zero polynomial.
Integer content(const IntPolynomial& p);
/// p / content(p), sign fixed so the leading coefficient is positive.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Remainder r with |lc(b)|^k · a = q·b + r and deg r < deg b. The
/// multiplier is positive, so r is a positive multiple of the field
/// remainder. Throws Error(kZeroPolynomial) if b is zero.
IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b when it exists in Z[x], otherwise nullopt.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Largest k with (1 + x)^k dividing p. Throws Error(kZeroPolynomial).
int multiplicity_of_minus_one(const IntPolynomial& p);

/// Cauchy bound 1 + max|c_k| / |c_deg|; every complex root lies strictly inside.
Rational cauchy_bound(const IntPolynomial& p);

/// Parses "[c0,c1,...]" (whitespace allowed, integers of any size).
/// Throws Error(kParse).
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace cliquelab
