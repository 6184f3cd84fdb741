// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include "cliquelab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "cliquelab/error.hpp"

namespace cliquelab {

namespace {

IntPolynomial must_divide(const IntPolynomial& a, const IntPolynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::kInternal, "inexact division " + a.to_string() + " / " + b.to_string());
  return std::move(*q);
}

IntPolynomial strip_content(IntPolynomial p) {
  const Integer c = content(p);
  if (c <= 1) return p;
  std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(v));
}

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = a + b;
  mpq_div_2exp(m.get_mpq_t(), m.get_mpq_t(), 1);
  return m;
}

}  // namespace

std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "square-free decomposition of zero polynomial");
  std::vector<SquareFreeFactor> out;
  const IntPolynomial a = primitive_part(p);
  if (a.degree() == 0) return out;
  if (a.degree() == 1) return {{a, 1}};

  // Yun: with g = gcd(a, a'), c = a/g and d = a'/g - c', each step splits
  // off the product of factors of multiplicity i as gcd(c, d). Every
  // divisor is primitive, so all quotients stay in Z[x].
  const IntPolynomial da = derivative(a);
  const IntPolynomial g = gcd(a, da);
  IntPolynomial c = must_divide(a, g);
  IntPolynomial d = must_divide(da, g) - derivative(c);
  for (int i = 1; c.degree() > 0; ++i) {
    const IntPolynomial ai = gcd(c, d);
    c = must_divide(c, ai);
    d = must_divide(d, ai) - derivative(c);
    if (ai.degree() > 0) out.push_back({ai, i});
  }
  return out;
}

SturmChain sturm_chain(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "Sturm chain of zero polynomial");
  SturmChain chain{p};
  if (p.degree() == 0) return chain;
  chain.push_back(derivative(p));
  while (true) {
    IntPolynomial r = signed_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-strip_content(std::move(r)));
  }
  if (chain.back().degree() > 0) {
    throw Error(ErrorCode::kNotSquareFree, "Sturm chain: " + p.to_string() + " is not square-free");
  }
  return chain;
}

int sign_variations(const SturmChain& chain, const Endpoint& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = x.value ? sign_at(q, *x.value) : sign_at_infinity(q, !x.positive);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_real_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi) {
  const bool lo_ok = lo.value || !lo.positive;
  const bool hi_ok = hi.value || hi.positive;
  if (!lo_ok || !hi_ok || (lo.value && hi.value && *lo.value >= *hi.value)) {
    throw Error(ErrorCode::kInvalidArgument, "count_real_roots: need lo < hi");
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_real_roots(const IntPolynomial& square_free, const Endpoint& lo, const Endpoint& hi) {
  return count_real_roots(sturm_chain(square_free), lo, hi);
}

// ---- algebraic numbers --------------------------------------------------

ExtendedRoot ExtendedRoot::from_rational(const Rational& q) {
  IntPolynomial def(std::vector<Integer>{-q.get_num(), q.get_den()});
  return AlgebraicRoot{std::move(def), q - 1, q, 1};
}

void refine(AlgebraicRoot& root) {
  // A square-free defining polynomial changes sign across its single root
  // in (lo, hi], so two sign evaluations choose the half.
  const int s_hi = sign_at(root.defining, root.hi);
  Rational mid = midpoint(root.lo, root.hi);
  if (s_hi == 0) {
    root.lo = std::move(mid);
    return;
  }
  const int s_mid = sign_at(root.defining, mid);
  if (s_mid == 0 || s_mid == s_hi) {
    root.hi = std::move(mid);
  } else {
    root.lo = std::move(mid);
  }
}

namespace {

std::optional<Rational> linear_root(const AlgebraicRoot& r) {
  if (r.defining.degree() != 1) return std::nullopt;
  Rational q(-r.defining.coeff(0), r.defining.coeff(1));
  q.canonicalize();
  return q;
}

bool disjoint(const AlgebraicRoot& a, const AlgebraicRoot& b) { return a.hi <= b.lo || b.hi <= a.lo; }

Rational width(const AlgebraicRoot& r) { return r.hi - r.lo; }

std::strong_ordering compare_with_rational(AlgebraicRoot a, const Rational& q) {
  while (a.lo < q && q <= a.hi) {
    if (sign_at(a.defining, q) == 0) return std::strong_ordering::equal;
    refine(a);
  }
  return a.hi <= q ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace

std::strong_ordering compare_roots(const ExtendedRoot& a, const ExtendedRoot& b) {
  if (a.is_negative_infinity() || b.is_negative_infinity()) {
    if (a.is_negative_infinity() && b.is_negative_infinity()) return std::strong_ordering::equal;
    return a.is_negative_infinity() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto q = linear_root(b.algebraic())) return compare_with_rational(a.algebraic(), *q);
  if (auto q = linear_root(a.algebraic())) return 0 <=> compare_with_rational(b.algebraic(), *q);

  AlgebraicRoot x = a.algebraic();
  AlgebraicRoot y = b.algebraic();
  Rational floor = std::max(cauchy_bound(x.defining), cauchy_bound(y.defining));
  mpq_div_2exp(floor.get_mpq_t(), floor.get_mpq_t(), 64);
  bool gcd_checked = false;
  while (!disjoint(x, y)) {
    if (!gcd_checked && width(x) <= floor && width(y) <= floor) {
      // x = y iff a common factor of the defining polynomials has a root
      // in the overlap: each interval holds only one root of its polynomial.
      gcd_checked = true;
      const IntPolynomial g = gcd(x.defining, y.defining);
      if (g.degree() > 0) {
        const Rational lo = std::max(x.lo, y.lo);
        const Rational hi = std::min(x.hi, y.hi);
        if (count_real_roots(g, Endpoint::at(lo), Endpoint::at(hi)) > 0) return std::strong_ordering::equal;
      }
    }
    if (width(x) >= width(y)) {
      refine(x);
    } else {
      refine(y);
    }
  }
  return x.hi <= y.lo ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::optional<Rational> exact_rational(const AlgebraicRoot& root) {
  if (auto q = linear_root(root)) return q;
  if (sign_at(root.defining, root.hi) == 0) return root.hi;
  // A rational root a/b in lowest terms has b | lc, so it is k/lc for an
  // integer k. Once the interval is shorter than 1/lc it holds at most one
  // such candidate.
  AlgebraicRoot r = root;
  const Integer lc = abs(r.defining.leading());
  const Rational step(1, lc);
  while (width(r) >= step) refine(r);
  Rational scaled = r.hi * lc;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational candidate(k, lc);
  candidate.canonicalize();
  if (candidate > r.lo && sign_at(r.defining, candidate) == 0) return candidate;
  return std::nullopt;
}

bool equals_rational(const ExtendedRoot& root, const Rational& q) {
  if (root.is_negative_infinity()) return false;
  const auto& a = root.algebraic();
  return a.lo < q && q <= a.hi && sign_at(a.defining, q) == 0;
}

std::string approximate(const ExtendedRoot& root) {
  if (root.is_negative_infinity()) return "-inf";
  AlgebraicRoot r = root.algebraic();
  double value = 0;
  if (auto q = linear_root(r)) {
    value = q->get_d();
  } else {
    Rational scale = std::max(abs(r.hi), abs(r.lo));
    if (scale < 1) scale = 1;
    mpq_div_2exp(scale.get_mpq_t(), scale.get_mpq_t(), 60);
    while (width(r) > scale) refine(r);
    value = midpoint(r.lo, r.hi).get_d();
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

// ---- isolation ----------------------------------------------------------

namespace {

void bisect(const IntPolynomial& f, const SturmChain& chain, int multiplicity, const Rational& lo, int v_lo,
            const Rational& hi, int v_hi, std::vector<AlgebraicRoot>& out) {
  const int count = v_lo - v_hi;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back({f, lo, hi, multiplicity});
    return;
  }
  const Rational mid = midpoint(lo, hi);
  const int v_mid = sign_variations(chain, Endpoint::at(mid));
  bisect(f, chain, multiplicity, mid, v_mid, hi, v_hi, out);
  bisect(f, chain, multiplicity, lo, v_lo, mid, v_mid, out);
}

void isolate_factor(const IntPolynomial& f, int multiplicity, std::vector<AlgebraicRoot>& out) {
  if (f.degree() == 1) {
    Rational q(-f.coeff(0), f.coeff(1));
    q.canonicalize();
    out.push_back({f, q - 1, q, multiplicity});
    return;
  }
  const SturmChain chain = sturm_chain(f);
  const Rational bound = cauchy_bound(f);
  const Rational lo = -bound;
  bisect(f, chain, multiplicity, lo, sign_variations(chain, Endpoint::at(lo)), bound,
         sign_variations(chain, Endpoint::at(bound)), out);
}

}  // namespace

RootReport isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "root isolation of zero polynomial");
  RootReport report;
  report.poly = p;
  report.degree = p.degree();
  std::vector<AlgebraicRoot> found;
  for (const auto& [factor, mult] : square_free_decomposition(p)) isolate_factor(factor, mult, found);

  // Roots of distinct factors are distinct, so refinement separates them.
  for (bool clean = false; !clean;) {
    clean = true;
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = i + 1; j < found.size(); ++j) {
        while (!disjoint(found[i], found[j])) {
          clean = false;
          refine(found[i]);
          refine(found[j]);
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const AlgebraicRoot& a, const AlgebraicRoot& b) { return a.lo > b.lo; });
  for (auto& r : found) {
    report.real_count_with_multiplicity += r.multiplicity;
    report.roots.emplace_back(std::move(r));
  }
  report.is_real_rooted = report.real_count_with_multiplicity == report.degree;
  return report;
}

int real_root_count_with_multiplicity(const IntPolynomial& p) {
  int total = 0;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    if (factor.degree() == 1) {
      total += mult;
      continue;
    }
    total += mult * count_real_roots(sturm_chain(factor), Endpoint::minus_infinity(), Endpoint::plus_infinity());
  }
  return total;
}

bool is_real_rooted(const IntPolynomial& p) { return real_root_count_with_multiplicity(p) == p.degree(); }

std::pair<ExtendedRoot, ExtendedRoot> top_two_roots(const RootReport& report) {
  if (report.roots.empty()) {
    throw Error(ErrorCode::kNoRealRoot, "polynomial " + report.poly.to_string() + " has no real root");
  }
  const ExtendedRoot& largest = report.roots[0];
  if (largest.multiplicity() >= 2) return {largest, largest};
  if (report.roots.size() >= 2) return {largest, report.roots[1]};
  return {largest, NegativeInfinity{}};
}

std::pair<ExtendedRoot, ExtendedRoot> top_two_roots(const IntPolynomial& p) {
  return top_two_roots(isolate_real_roots(p));
}

std::pair<ExtendedRoot, ExtendedRoot> top_two_distinct_roots(const RootReport& report) {
  if (report.roots.empty()) {
    throw Error(ErrorCode::kNoRealRoot, "polynomial " + report.poly.to_string() + " has no real root");
  }
  if (report.roots.size() >= 2) return {report.roots[0], report.roots[1]};
  return {report.roots[0], NegativeInfinity{}};
}

}  // namespace cliquelab
