// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cliquelab/polynomial.hpp"
#include "cliquelab/roots.hpp"

namespace cliquelab {

struct FamilyMember {
  IntPolynomial poly;
  ExtendedRoot largest;         // R_j
  ExtendedRoot second_largest;  // r_j, counted with multiplicity
  ExtendedRoot second_distinct; // runner-up among distinct roots
};

/// Evaluation of the interlacing lemma on one concrete family. Hypothesis
/// and conclusion are recorded separately and never assumed.
struct LemmaFamilyReport {
  std::vector<FamilyMember> members;
  ExtendedRoot max_second;  // max_j r_j
  ExtendedRoot min_largest; // min_j R_j
  bool hypothesis_holds = false;
  IntPolynomial sum;
  std::optional<ExtendedRoot> sum_largest_root;  // absent when the sum has no real root
  std::optional<bool> conclusion_holds;          // set only when hypothesis holds

  /// Hypothesis evaluated with r_j taken over distinct roots.
  bool distinct_reading_hypothesis_holds = false;
  /// Whether the sum has a real root >= min_j R_j, reported for every family.
  bool sum_root_above_min_largest = false;
};

/// Throws Error(kInvalidArgument) for an empty family, or for a member that
/// is zero, has negative leading coefficient, or has no real root; the
/// message names the member index.
LemmaFamilyReport analyze_family(const std::vector<IntPolynomial>& polys);

/// One family per line, each a coefficient list. Blank lines are ignored.
std::vector<IntPolynomial> parse_family(std::string_view text);

struct StressSummary {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t hypothesis_and_conclusion = 0;
  std::uint64_t hypothesis_without_conclusion = 0;
  std::uint64_t hypothesis_fails = 0;
  /// Families with hypothesis ∧ ¬conclusion, kept verbatim.
  std::vector<std::vector<IntPolynomial>> violations;

  friend bool operator==(const StressSummary&, const StressSummary&) = default;
};

/// Random families built from integer-rooted linear factors and quadratics
/// with negative discriminant, so every member has a real root and a
/// positive leading coefficient. Trial t draws from its own generator
/// seeded by (seed, t), so the summary depends only on (seed, trials).
std::vector<IntPolynomial> random_family(std::uint64_t seed, std::uint64_t trial);
StressSummary random_family_stress(std::uint64_t seed, std::uint64_t trials);

}  // namespace cliquelab
