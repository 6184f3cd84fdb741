// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cliquelab/cliquepoly.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/theorems.hpp"

namespace cliquelab {

enum class TargetKind {
  kConj1,       // connected, K4-free
  kConj2,       // κ >= 2, K5-free, every edge in at most two triangles
  kConj3,       // κ >= l, chordal, K_{l+3}-free
  kQuest1,      // κ >= 2, non-chordal, K5-free; real-rooted graphs are hits
  kProposition, // hypothesis of a claim verifier
  kIdentities,  // vertex/edge recurrences and both derivative identities
};

struct ScanTarget {
  TargetKind kind = TargetKind::kConj1;
  int connectivity = 1;               // l, for kConj3
  ClaimId claim = ClaimId::kTree;     // for kProposition

  /// "conj1", "conj2", "conj3:2" (or "conj3" with l = 1), "quest1",
  /// "prop:<claim>", "identities". Case-insensitive.
  static ScanTarget parse(std::string_view text);
  std::string name() const;
};

struct BuiltinSource {
  int n = 0;
};
struct Graph6FileSource {
  std::string path;  // "-" reads standard input
};
struct StreamSource {
  std::istream* stream = nullptr;
};
using ScanSource = std::variant<BuiltinSource, Graph6FileSource, StreamSource>;

enum class EmitPolicy { kAll, kHits, kSummary };
EmitPolicy parse_emit_policy(std::string_view text);

struct ScanConfig {
  ScanTarget target;
  ScanSource source = BuiltinSource{};
  int jobs = 1;
  EmitPolicy emit = EmitPolicy::kSummary;

  /// Throws Error(kInvalidArgument) on bad combinations.
  void validate() const;
};

struct ScanRecord {
  std::uint64_t seq = 0;
  std::string graph6;
  int n = 0;
  int m = 0;
  std::vector<std::pair<std::string, bool>> filters;  // in evaluation order
  CliqueVector coeffs;
  bool real_rooted = false;
  bool counterexample = false;
  bool hit = false;
};

struct ScanSummary {
  std::string target;
  std::uint64_t seen = 0;
  std::uint64_t filtered = 0;
  std::uint64_t real_rooted = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t hits = 0;
  std::uint64_t malformed = 0;

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

/// Called once per emitted JSON line (no trailing newline).
using LineSink = std::function<void(std::string_view)>;

/// Evaluates one graph against the target. Returns false when the graph
/// does not pass the target's filters.
bool evaluate_graph(const ScanTarget& target, const Graph& g, ScanRecord& record);

/// Re-derives the clique vector with the subset oracle and re-runs the
/// target's exact check on the rebuilt polynomial. Returns true when the
/// counterexample is confirmed.
bool confirm_counterexample(const ScanTarget& target, const Graph& g, const ScanRecord& record);

/// Streams graphs from the source in order, evaluates them on `jobs`
/// workers and emits records in input order, then the summary line.
/// Malformed graph6 lines are reported on `diagnostics` and skipped.
/// Throws Error(kIo) for an unreadable source and Error(kInternal) if a
/// counterexample fails confirmation.
ScanSummary run_scan(const ScanConfig& config, const LineSink& out, const LineSink& diagnostics = {});

}  // namespace cliquelab
