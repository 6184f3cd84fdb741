// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include "cliquelab/interlace.hpp"

#include <random>
#include <string>

#include "cliquelab/error.hpp"

namespace cliquelab {

namespace {

const ExtendedRoot& max_root(const ExtendedRoot& a, const ExtendedRoot& b) { return compare_roots(a, b) < 0 ? b : a; }
const ExtendedRoot& min_root(const ExtendedRoot& a, const ExtendedRoot& b) { return compare_roots(b, a) < 0 ? b : a; }

}  // namespace

LemmaFamilyReport analyze_family(const std::vector<IntPolynomial>& polys) {
  if (polys.empty()) throw Error(ErrorCode::kInvalidArgument, "lemma family is empty");
  LemmaFamilyReport report;
  report.members.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const IntPolynomial& f = polys[i];
    const std::string where = "family member " + std::to_string(i) + " " + f.to_string();
    if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, where + " is zero");
    if (sgn(f.leading()) < 0) throw Error(ErrorCode::kInvalidArgument, where + " has negative leading coefficient");
    const RootReport roots = isolate_real_roots(f);
    if (roots.roots.empty()) throw Error(ErrorCode::kInvalidArgument, where + " has no real root");
    auto [largest, second] = top_two_roots(roots);
    report.members.push_back({f, std::move(largest), std::move(second), top_two_distinct_roots(roots).second});
    report.sum += f;
  }

  ExtendedRoot max_second = report.members[0].second_largest;
  ExtendedRoot max_second_distinct = report.members[0].second_distinct;
  ExtendedRoot min_largest = report.members[0].largest;
  for (std::size_t i = 1; i < report.members.size(); ++i) {
    const auto& m = report.members[i];
    max_second = max_root(max_second, m.second_largest);
    max_second_distinct = max_root(max_second_distinct, m.second_distinct);
    min_largest = min_root(min_largest, m.largest);
  }
  report.hypothesis_holds = compare_roots(max_second, min_largest) <= 0;
  report.distinct_reading_hypothesis_holds = compare_roots(max_second_distinct, min_largest) <= 0;

  const RootReport sum_roots = isolate_real_roots(report.sum);
  if (!sum_roots.roots.empty()) {
    report.sum_largest_root = sum_roots.roots.front();
    report.sum_root_above_min_largest = compare_roots(min_largest, *report.sum_largest_root) <= 0;
  }
  if (report.hypothesis_holds) report.conclusion_holds = report.sum_root_above_min_largest;
  report.max_second = std::move(max_second);
  report.min_largest = std::move(min_largest);
  return report;
}

std::vector<IntPolynomial> parse_family(std::string_view text) {
  std::vector<IntPolynomial> out;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    out.push_back(parse_polynomial(line));
  }
  return out;
}

namespace {

IntPolynomial linear(long a, long b) { return IntPolynomial{-b, a}; }  // a·x - b, root b/a

IntPolynomial complex_quadratic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> b_dist(-4, 4);
  const long b = b_dist(rng);
  // c > b²/4 keeps the discriminant negative.
  std::uniform_int_distribution<long> c_dist(b * b / 4 + 1, b * b / 4 + 6);
  return IntPolynomial{c_dist(rng), b, 1};
}

}  // namespace

std::vector<IntPolynomial> random_family(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  const long size = uniform(1, 4);
  const bool separated = uniform(0, 1) == 1;
  const long threshold = uniform(-5, 5);
  std::vector<IntPolynomial> family;
  for (long i = 0; i < size; ++i) {
    IntPolynomial f{uniform(1, 3)};
    if (separated) {
      // Largest root at or above the threshold, all others at or below it.
      const long a = uniform(1, 2);
      f = f * linear(a, a * threshold + uniform(0, 6));
      for (long k = uniform(0, 2); k > 0; --k) f = f * linear(1, threshold - uniform(0, 6));
    } else {
      for (long k = uniform(1, 3); k > 0; --k) f = f * linear(uniform(1, 3), uniform(-6, 6));
    }
    for (long k = uniform(0, 2); k > 0; --k) f = f * complex_quadratic(rng);
    family.push_back(std::move(f));
  }
  return family;
}

StressSummary random_family_stress(std::uint64_t seed, std::uint64_t trials) {
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "stress run needs at least one trial");
  StressSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<IntPolynomial> family = random_family(seed, t);
    const LemmaFamilyReport report = analyze_family(family);
    if (!report.hypothesis_holds) {
      ++summary.hypothesis_fails;
    } else if (*report.conclusion_holds) {
      ++summary.hypothesis_and_conclusion;
    } else {
      ++summary.hypothesis_without_conclusion;
      summary.violations.push_back(std::move(family));
    }
  }
  return summary;
}

}  // namespace cliquelab
