// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include "cliquelab/report_json.hpp"

namespace cliquelab {

using nlohmann::json;

json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

json to_json(const CliqueVector& counts) {
  json arr = json::array();
  for (const auto& c : counts) arr.push_back(to_json(c));
  return arr;
}

json to_json(const ExtendedRoot& root) {
  if (root.is_negative_infinity()) return nullptr;
  const auto& a = root.algebraic();
  json out = {
      {"defining", to_json(a.defining)},
      {"interval", {to_string(a.lo), to_string(a.hi)}},
      {"multiplicity", a.multiplicity},
      {"approx", approximate(root)},
  };
  if (auto q = exact_rational(a)) out["exact"] = to_string(*q);
  return out;
}

json to_json(const RootReport& report) {
  json roots = json::array();
  for (const auto& r : report.roots) roots.push_back(to_json(r));
  return {
      {"poly", to_json(report.poly)},
      {"degree", report.degree},
      {"real_count_with_multiplicity", report.real_count_with_multiplicity},
      {"real_rooted", report.is_real_rooted},
      {"roots", std::move(roots)},
  };
}

json to_json(const LemmaFamilyReport& report) {
  json members = json::array();
  for (const auto& m : report.members) {
    members.push_back({
        {"poly", to_json(m.poly)},
        {"R", to_json(m.largest)},
        {"r", to_json(m.second_largest)},
        {"r_distinct", to_json(m.second_distinct)},
    });
  }
  json out = {
      {"members", std::move(members)},
      {"max_r", to_json(report.max_second)},
      {"min_R", to_json(report.min_largest)},
      {"hypothesis_holds", report.hypothesis_holds},
      {"sum", to_json(report.sum)},
      {"sum_largest_root", report.sum_largest_root ? to_json(*report.sum_largest_root) : json(nullptr)},
      {"conclusion_holds", report.conclusion_holds ? json(*report.conclusion_holds) : json(nullptr)},
      {"distinct_reading_hypothesis_holds", report.distinct_reading_hypothesis_holds},
      {"sum_root_above_min_R", report.sum_root_above_min_largest},
  };
  return out;
}

json to_json(const StressSummary& summary) {
  json violations = json::array();
  for (const auto& family : summary.violations) {
    json f = json::array();
    for (const auto& p : family) f.push_back(to_json(p));
    violations.push_back(std::move(f));
  }
  return {
      {"seed", summary.seed},
      {"trials", summary.trials},
      {"hypothesis_and_conclusion", summary.hypothesis_and_conclusion},
      {"hypothesis_without_conclusion", summary.hypothesis_without_conclusion},
      {"hypothesis_fails", summary.hypothesis_fails},
      {"violations", std::move(violations)},
  };
}

json to_json(const PropositionResult& result) {
  const auto& d = result.detail;
  json detail = {
      {"polynomial", to_json(d.polynomial)},
      {"real_rooted", d.real_rooted},
      {"minus_one_multiplicity", d.minus_one_multiplicity},
  };
  if (d.kappa) detail["kappa"] = *d.kappa;
  if (d.omega) detail["omega"] = *d.omega;
  if (d.connected) detail["connected"] = *d.connected;
  if (d.chordal) detail["chordal"] = *d.chordal;
  if (d.largest_root) detail["largest_root"] = to_json(*d.largest_root);
  if (d.second_root) detail["second_root"] = to_json(*d.second_root);
  if (d.discriminant) detail["discriminant"] = to_json(*d.discriminant);
  if (d.divisible_by_one_plus_x) detail["divisible_by_one_plus_x"] = *d.divisible_by_one_plus_x;
  if (d.bound) detail["bound"] = to_string(*d.bound);
  if (d.tight_bound) detail["tight_bound"] = to_string(*d.tight_bound);
  if (!d.notes.empty()) detail["notes"] = d.notes;
  return {
      {"claim_id", to_string(result.claim)},
      {"hypothesis_met", result.hypothesis_met},
      {"conclusion_holds", result.conclusion_holds ? json(*result.conclusion_holds) : json(nullptr)},
      {"detail", std::move(detail)},
  };
}

json to_json(const ScanRecord& record) {
  json filters = json::object();
  for (const auto& [name, value] : record.filters) filters[name] = value;
  return {
      {"seq", record.seq},
      {"graph6", record.graph6},
      {"n", record.n},
      {"m", record.m},
      {"filters", std::move(filters)},
      {"coeffs", to_json(record.coeffs)},
      {"real_rooted", record.real_rooted},
      {"flags", {{"counterexample", record.counterexample}, {"hit", record.hit}}},
  };
}

json to_json(const ScanSummary& summary) {
  return {{"summary",
           {
               {"target", summary.target},
               {"seen", summary.seen},
               {"filtered", summary.filtered},
               {"real_rooted", summary.real_rooted},
               {"counterexamples", summary.counterexamples},
               {"hits", summary.hits},
               {"malformed", summary.malformed},
           }}};
}

}  // namespace cliquelab
