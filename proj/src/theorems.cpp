// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include "cliquelab/theorems.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "cliquelab/cliquepoly.hpp"
#include "cliquelab/error.hpp"

namespace cliquelab {

const char* to_string(ClaimId id) {
  switch (id) {
    case ClaimId::kTree: return "TREE";
    case ClaimId::kForest: return "FOREST";
    case ClaimId::kTriangleFree: return "TRIANGLE_FREE";
    case ClaimId::kK4Chordal: return "K4_CHORDAL";
    case ClaimId::kK5Bichordal: return "K5_BICHORDAL";
    case ClaimId::kChordalMultiplicity: return "CHORDAL_MULT";
  }
  return "UNKNOWN";
}

ClaimId parse_claim_id(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) {
    return c == '-' ? '_' : static_cast<char>(std::toupper(c));
  });
  for (ClaimId id : kAllClaims) {
    if (upper == to_string(id)) return id;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown claim \"" + std::string(name) + "\"");
}

namespace {

PropositionResult start(ClaimId id, const Graph& g) {
  PropositionResult r;
  r.claim = id;
  r.detail.polynomial = clique_polynomial(g);
  r.detail.omega = r.detail.polynomial.degree();
  r.detail.minus_one_multiplicity = multiplicity_of_minus_one(r.detail.polynomial);
  return r;
}

Rational minus_reciprocal(int k) {
  Rational q(-1, k);
  q.canonicalize();
  return q;
}

}  // namespace

PropositionResult verify_tree(const Graph& g) {
  PropositionResult r = start(ClaimId::kTree, g);
  const int n = g.order();
  r.detail.connected = is_connected(g);
  r.hypothesis_met = n >= 2 && *r.detail.connected && g.size() == n - 1;
  if (!r.hypothesis_met) {
    r.detail.real_rooted = is_real_rooted(r.detail.polynomial);
    return r;
  }
  const RootReport roots = isolate_real_roots(r.detail.polynomial);
  r.detail.real_rooted = roots.is_real_rooted;
  const IntPolynomial expected = IntPolynomial::one_plus_x() * IntPolynomial{1, n - 1};
  bool holds = roots.is_real_rooted && r.detail.polynomial == expected;
  if (!roots.roots.empty()) {
    auto [largest, second] = top_two_roots(roots);
    holds = holds && equals_rational(largest, minus_reciprocal(n - 1)) && equals_rational(second, Rational(-1));
    r.detail.largest_root = std::move(largest);
    r.detail.second_root = std::move(second);
  } else {
    holds = false;
  }
  r.conclusion_holds = holds;
  return r;
}

PropositionResult verify_forest(const Graph& g) {
  PropositionResult r = start(ClaimId::kForest, g);
  const auto comps = components(g);
  std::size_t smallest = g.order();
  std::size_t largest = 0;
  for (const auto& c : comps) {
    smallest = std::min(smallest, c.size());
    largest = std::max(largest, c.size());
  }
  r.hypothesis_met = !comps.empty() && is_forest(g) && smallest >= 2;
  const RootReport roots = isolate_real_roots(r.detail.polynomial);
  r.detail.real_rooted = roots.is_real_rooted;
  r.detail.connected = comps.size() <= 1;
  if (!r.hypothesis_met) return r;
  r.detail.bound = minus_reciprocal(static_cast<int>(smallest) - 1);
  r.detail.tight_bound = minus_reciprocal(static_cast<int>(largest) - 1);
  r.detail.notes.push_back("bound uses the smallest component; tight_bound uses the largest");
  if (roots.roots.empty()) {
    r.conclusion_holds = false;
    return r;
  }
  r.detail.largest_root = roots.roots.front();
  r.conclusion_holds = compare_roots(ExtendedRoot::from_rational(*r.detail.bound), roots.roots.front()) <= 0;
  return r;
}

PropositionResult verify_triangle_free(const Graph& g) {
  PropositionResult r = start(ClaimId::kTriangleFree, g);
  r.hypothesis_met = is_triangle_free(g);
  r.detail.real_rooted = is_real_rooted(r.detail.polynomial);
  r.detail.connected = is_connected(g);
  r.detail.discriminant = Integer(g.order()) * g.order() - Integer(4) * g.size();
  if (!r.hypothesis_met) return r;
  if (!*r.detail.connected) r.detail.notes.push_back("disconnected: checked without the connectivity assumption");
  r.conclusion_holds = r.detail.real_rooted;
  return r;
}

PropositionResult verify_k4_chordal(const Graph& g) {
  PropositionResult r = start(ClaimId::kK4Chordal, g);
  r.detail.real_rooted = is_real_rooted(r.detail.polynomial);
  r.detail.divisible_by_one_plus_x = r.detail.minus_one_multiplicity >= 1;
  r.detail.connected = is_connected(g);
  r.hypothesis_met = g.order() >= 1 && *r.detail.omega <= 3 && *r.detail.connected;
  if (r.hypothesis_met) {
    r.detail.chordal = is_chordal(g).chordal;
    r.hypothesis_met = *r.detail.chordal;
  }
  if (r.hypothesis_met) r.conclusion_holds = r.detail.real_rooted;
  return r;
}

PropositionResult verify_k5_bichordal(const Graph& g) {
  PropositionResult r = start(ClaimId::kK5Bichordal, g);
  r.detail.real_rooted = is_real_rooted(r.detail.polynomial);
  r.hypothesis_met = *r.detail.omega <= 4;
  if (r.hypothesis_met) {
    r.detail.chordal = is_chordal(g).chordal;
    r.hypothesis_met = *r.detail.chordal;
  }
  if (r.hypothesis_met) {
    r.detail.kappa = vertex_connectivity(g);
    r.hypothesis_met = *r.detail.kappa >= 2;
  }
  if (r.hypothesis_met) {
    if (r.detail.minus_one_multiplicity < 2) r.detail.notes.push_back("root -1 has multiplicity below 2");
    r.conclusion_holds = r.detail.real_rooted;
  }
  return r;
}

PropositionResult verify_chordal_multiplicity(const Graph& g) {
  PropositionResult r = start(ClaimId::kChordalMultiplicity, g);
  r.detail.real_rooted = is_real_rooted(r.detail.polynomial);
  r.detail.connected = is_connected(g);
  r.hypothesis_met = g.order() >= 1 && *r.detail.connected;
  if (r.hypothesis_met) {
    r.detail.chordal = is_chordal(g).chordal;
    r.hypothesis_met = *r.detail.chordal;
  }
  if (!r.hypothesis_met) return r;
  const int k = vertex_connectivity(g);
  r.detail.kappa = k;
  // (1+x)^k | C(G), checked by repeated exact division.
  r.conclusion_holds = r.detail.minus_one_multiplicity >= k;
  return r;
}

PropositionResult verify(ClaimId id, const Graph& g) {
  switch (id) {
    case ClaimId::kTree: return verify_tree(g);
    case ClaimId::kForest: return verify_forest(g);
    case ClaimId::kTriangleFree: return verify_triangle_free(g);
    case ClaimId::kK4Chordal: return verify_k4_chordal(g);
    case ClaimId::kK5Bichordal: return verify_k5_bichordal(g);
    case ClaimId::kChordalMultiplicity: return verify_chordal_multiplicity(g);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown claim");
}

}  // namespace cliquelab
