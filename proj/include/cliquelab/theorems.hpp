// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquelab/graph.hpp"
#include "cliquelab/polynomial.hpp"
#include "cliquelab/roots.hpp"

namespace cliquelab {

enum class ClaimId {
  kTree,
  kForest,
  kTriangleFree,
  kK4Chordal,
  kK5Bichordal,
  kChordalMultiplicity,
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::kTree,        ClaimId::kForest,      ClaimId::kTriangleFree,
    ClaimId::kK4Chordal,   ClaimId::kK5Bichordal, ClaimId::kChordalMultiplicity,
};

/// "TREE", "FOREST", "TRIANGLE_FREE", "K4_CHORDAL", "K5_BICHORDAL", "CHORDAL_MULT".
const char* to_string(ClaimId id);
/// Case-insensitive; throws Error(kInvalidArgument) for unknown names.
ClaimId parse_claim_id(std::string_view name);

/// Facts gathered while checking a claim. Fields a verifier does not look
/// at stay empty.
struct PropositionDetail {
  IntPolynomial polynomial;
  bool real_rooted = false;
  int minus_one_multiplicity = 0;
  std::optional<int> kappa;
  std::optional<int> omega;
  std::optional<bool> connected;
  std::optional<bool> chordal;
  std::optional<ExtendedRoot> largest_root;
  std::optional<ExtendedRoot> second_root;
  std::optional<Integer> discriminant;        // n² - 4m
  std::optional<bool> divisible_by_one_plus_x;
  std::optional<Rational> bound;              // forest: -1/(n_min - 1)
  std::optional<Rational> tight_bound;        // forest: -1/(n_max - 1)
  std::vector<std::string> notes;
};

struct PropositionResult {
  ClaimId claim = ClaimId::kTree;
  bool hypothesis_met = false;
  std::optional<bool> conclusion_holds;  // present iff hypothesis_met
  PropositionDetail detail;
};

PropositionResult verify_tree(const Graph& g);
PropositionResult verify_forest(const Graph& g);
PropositionResult verify_triangle_free(const Graph& g);
PropositionResult verify_k4_chordal(const Graph& g);
PropositionResult verify_k5_bichordal(const Graph& g);
PropositionResult verify_chordal_multiplicity(const Graph& g);

PropositionResult verify(ClaimId id, const Graph& g);

}  // namespace cliquelab
