// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include "cliquelab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "cliquelab/error.hpp"

namespace cliquelab {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---- IntPolynomial ------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, int k) {
  std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_plus_x() { return IntPolynomial{1, 1}; }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Integer> r(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += coeffs_[k].get_str();
  }
  return out + "]";
}

// ---- arithmetic ---------------------------------------------------------

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial power(const IntPolynomial& p, int e) {
  IntPolynomial r{1};
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> r(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) r[static_cast<std::size_t>(k - 1)] = p.coeffs()[static_cast<std::size_t>(k)] * k;
  return IntPolynomial(std::move(r));
}

IntPolynomial shift_up(const IntPolynomial& p, int k) {
  if (p.is_zero()) return {};
  std::vector<Integer> r(static_cast<std::size_t>(k));
  r.insert(r.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPolynomial(std::move(r));
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeffs()[static_cast<std::size_t>(k)];
  return acc;
}

int sign_at(const IntPolynomial& p, const Rational& x) {
  // den^d · p(num/den), evaluated by homogeneous Horner over Z.
  if (p.is_zero()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = p.leading();
  Integer den_pow = den;
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc *= num;
    acc += p.coeffs()[static_cast<std::size_t>(k)] * den_pow;
    if (k) den_pow *= den;
  }
  return sgn(acc);
}

int sign_at_infinity(const IntPolynomial& p, bool negative) {
  if (p.is_zero()) return 0;
  const int s = sgn(p.leading());
  return (negative && p.degree() % 2 == 1) ? -s : s;
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  Integer c = content(p);
  if (sgn(p.leading()) < 0) c = -c;
  std::vector<Integer> r(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(r));
}

IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "pseudo-remainder by zero polynomial");
  const int db = b.degree();
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const Integer lb = abs(b.leading());
  const int sb = sgn(b.leading());
  int dr = a.degree();
  // r <- |lc(b)|·r - sign(lc(b))·lc(r)·x^(dr-db)·b, a positive multiple of
  // the field reduction step.
  while (dr >= db) {
    const Integer lr = r[static_cast<std::size_t>(dr)];
    const int shift = dr - db;
    for (int k = 0; k <= dr; ++k) r[static_cast<std::size_t>(k)] *= lb;
    for (int k = 0; k <= db; ++k) {
      Integer t = lr * b.coeffs()[static_cast<std::size_t>(k)];
      if (sb > 0) {
        r[static_cast<std::size_t>(k + shift)] -= t;
      } else {
        r[static_cast<std::size_t>(k + shift)] += t;
      }
    }
    --dr;
    while (dr >= 0 && sgn(r[static_cast<std::size_t>(dr)]) == 0) --dr;
  }
  r.resize(static_cast<std::size_t>(std::max(dr + 1, 0)));
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = primitive_part(signed_pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (x.degree() == 0) return IntPolynomial{1};
  return x;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= t * b.coeffs()[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(k)] = std::move(t);
  }
  for (int k = 0; k < db; ++k) {
    if (sgn(r[static_cast<std::size_t>(k)]) != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

int multiplicity_of_minus_one(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "multiplicity of -1 in zero polynomial");
  const IntPolynomial d = IntPolynomial::one_plus_x();
  int k = 0;
  IntPolynomial cur = p;
  while (auto q = divide_exact(cur, d)) {
    cur = std::move(*q);
    ++k;
  }
  return k;
}

Rational cauchy_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "Cauchy bound of zero polynomial");
  Integer top = 0;
  for (int k = 0; k < p.degree(); ++k) top = std::max(top, Integer(abs(p.coeffs()[static_cast<std::size_t>(k)])));
  Rational b(top, abs(p.leading()));
  b.canonicalize();
  return b + 1;
}

IntPolynomial parse_polynomial(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::kParse, "polynomial \"" + std::string(text) + "\": " + why);
  };
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw fail("expected '['");
  ++i;
  std::vector<Integer> coeffs;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip();
      const std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      const std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw fail("expected integer at offset " + std::to_string(start));
      std::string token(text.substr(start, i - start));
      if (token[0] == '+') token.erase(0, 1);
      coeffs.emplace_back(token, 10);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw fail("expected ',' or ']' at offset " + std::to_string(i));
    }
  }
  skip();
  if (i != text.size()) throw fail("trailing characters at offset " + std::to_string(i));
  return IntPolynomial(std::move(coeffs));
}

}  // namespace cliquelab
