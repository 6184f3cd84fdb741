// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include "cliquelab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "cliquelab/error.hpp"
#include "cliquelab/report_json.hpp"

namespace cliquelab {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

int parse_positive(std::string_view s, const std::string& what) {
  int v = 0;
  if (s.empty()) throw Error(ErrorCode::kInvalidArgument, what + ": missing number");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || v > 1000) {
      throw Error(ErrorCode::kInvalidArgument, what + ": bad number \"" + std::string(s) + "\"");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

ScanTarget ScanTarget::parse(std::string_view text) {
  const std::string t = lower(text);
  ScanTarget target;
  if (t == "conj1") {
    target.kind = TargetKind::kConj1;
  } else if (t == "conj2") {
    target.kind = TargetKind::kConj2;
  } else if (t == "conj3" || t.rfind("conj3:", 0) == 0 || t.rfind("conj3(", 0) == 0) {
    target.kind = TargetKind::kConj3;
    if (t.size() > 5) {
      std::string_view arg = std::string_view(t).substr(6);
      if (t[5] == '(') {
        if (arg.empty() || arg.back() != ')') throw Error(ErrorCode::kInvalidArgument, "bad target " + t);
        arg.remove_suffix(1);
      }
      target.connectivity = parse_positive(arg, "conj3 connectivity");
    }
  } else if (t == "quest1") {
    target.kind = TargetKind::kQuest1;
  } else if (t.rfind("prop:", 0) == 0) {
    target.kind = TargetKind::kProposition;
    target.claim = parse_claim_id(std::string_view(t).substr(5));
  } else if (t == "identities") {
    target.kind = TargetKind::kIdentities;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown scan target \"" + std::string(text) + "\"");
  }
  if (target.kind == TargetKind::kConj3 && target.connectivity < 1) {
    throw Error(ErrorCode::kInvalidArgument, "conj3 needs connectivity l >= 1");
  }
  return target;
}

std::string ScanTarget::name() const {
  switch (kind) {
    case TargetKind::kConj1: return "conj1";
    case TargetKind::kConj2: return "conj2";
    case TargetKind::kConj3: return "conj3:" + std::to_string(connectivity);
    case TargetKind::kQuest1: return "quest1";
    case TargetKind::kProposition: return std::string("prop:") + to_string(claim);
    case TargetKind::kIdentities: return "identities";
  }
  return "unknown";
}

EmitPolicy parse_emit_policy(std::string_view text) {
  const std::string t = lower(text);
  if (t == "all") return EmitPolicy::kAll;
  if (t == "hits") return EmitPolicy::kHits;
  if (t == "summary") return EmitPolicy::kSummary;
  throw Error(ErrorCode::kInvalidArgument, "unknown emit policy \"" + std::string(text) + "\"");
}

void ScanConfig::validate() const {
  if (jobs < 1) throw Error(ErrorCode::kInvalidArgument, "jobs must be >= 1");
  if (target.kind == TargetKind::kConj3 && target.connectivity < 1) {
    throw Error(ErrorCode::kInvalidArgument, "conj3 needs connectivity l >= 1");
  }
  if (const auto* b = std::get_if<BuiltinSource>(&source)) {
    if (b->n < 0 || b->n > kMaxEnumerationVertices) {
      throw Error(ErrorCode::kInvalidArgument, "builtin enumeration supports 0 <= n <= " +
                                                   std::to_string(kMaxEnumerationVertices) +
                                                   "; use a graph6 stream for larger graphs");
    }
  }
  if (const auto* s = std::get_if<StreamSource>(&source); s && s->stream == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "null input stream");
  }
}

// ---- per-graph evaluation -----------------------------------------------

namespace {

// Filter stages run cheapest first: edge count, triangles, ω, chordality, κ.
struct FilterRun {
  ScanRecord& record;
  bool pass(const char* name, bool value) {
    if (value) record.filters.emplace_back(name, true);
    return value;
  }
};

bool evaluate_conjecture(const ScanTarget& target, const Graph& g, ScanRecord& record) {
  const int n = g.order();
  const int m = g.size();
  FilterRun f{record};
  const int omega = static_cast<int>(record.coeffs.size()) - 1;
  switch (target.kind) {
    case TargetKind::kConj1:
      if (m < n - 1) return false;
      return f.pass("k4_free", omega < 4) && f.pass("connected", is_connected(g));
    case TargetKind::kConj2:
      if (n < 3 || m < n) return false;
      return f.pass("max_triangles_per_edge_le_2", max_triangles_per_edge(g) <= 2) &&
             f.pass("k5_free", omega < 5) && f.pass("kappa_ge_2", is_k_connected(g, 2));
    case TargetKind::kConj3: {
      const int l = target.connectivity;
      if (n < l + 1 || 2 * m < l * n) return false;
      const std::string kfree = "k" + std::to_string(l + 3) + "_free";
      const std::string kappa = "kappa_ge_" + std::to_string(l);
      return f.pass(kfree.c_str(), omega < l + 3) && f.pass("chordal", is_chordal(g).chordal) &&
             f.pass(kappa.c_str(), is_k_connected(g, l));
    }
    case TargetKind::kQuest1:
      if (n < 3 || m < n) return false;
      return f.pass("k5_free", omega < 5) && f.pass("non_chordal", !is_chordal(g).chordal) &&
             f.pass("kappa_ge_2", is_k_connected(g, 2));
    default:
      break;
  }
  return false;
}

}  // namespace

bool evaluate_graph(const ScanTarget& target, const Graph& g, ScanRecord& record) {
  record.n = g.order();
  record.m = g.size();
  record.filters.clear();
  record.coeffs = clique_counts(g);
  record.counterexample = false;
  record.hit = false;

  switch (target.kind) {
    case TargetKind::kProposition: {
      const PropositionResult r = verify(target.claim, g);
      if (!r.hypothesis_met) return false;
      record.filters.emplace_back("hypothesis", true);
      record.real_rooted = r.detail.real_rooted;
      record.counterexample = !*r.conclusion_holds;
      break;
    }
    case TargetKind::kIdentities: {
      const IdentityCheck c = check_identities(g);
      record.filters = {{"vertex_recurrence", c.vertex_recurrence},
                        {"edge_recurrence", c.edge_recurrence},
                        {"vertex_derivative", c.vertex_derivative},
                        {"edge_derivative", c.edge_derivative}};
      record.real_rooted = is_real_rooted(to_polynomial(record.coeffs));
      record.counterexample = !c.all();
      break;
    }
    default: {
      if (!evaluate_conjecture(target, g, record)) return false;
      record.real_rooted = is_real_rooted(to_polynomial(record.coeffs));
      if (target.kind == TargetKind::kQuest1) {
        record.hit = record.real_rooted;
      } else {
        record.counterexample = !record.real_rooted;
      }
    }
  }
  record.graph6 = to_graph6(g);
  return true;
}

bool confirm_counterexample(const ScanTarget& target, const Graph& g, const ScanRecord& record) {
  const CliqueVector oracle = clique_counts_by_subsets(g);
  if (oracle != record.coeffs) return false;
  const IntPolynomial poly = to_polynomial(oracle);
  switch (target.kind) {
    case TargetKind::kIdentities:
      return !check_identities_by_subsets(g).all();
    case TargetKind::kProposition: {
      if (verify(target.claim, g).conclusion_holds != false) return false;
      switch (target.claim) {
        case ClaimId::kChordalMultiplicity:
          return multiplicity_of_minus_one(poly) < vertex_connectivity(g);
        case ClaimId::kTree:
        case ClaimId::kForest:
          return true;
        default:
          return !isolate_real_roots(poly).is_real_rooted;
      }
    }
    default:
      return !isolate_real_roots(poly).is_real_rooted;
  }
}

// ---- scan engine --------------------------------------------------------

namespace {

constexpr std::size_t kBatchSize = 4096;

struct WorkItem {
  std::uint64_t seq = 0;
  Graph graph;
};

class GraphSource {
 public:
  GraphSource(const ScanSource& source, const LineSink& diagnostics, ScanSummary& summary)
      : diagnostics_(diagnostics), summary_(summary) {
    if (const auto* b = std::get_if<BuiltinSource>(&source)) {
      builtin_.emplace(b->n);
    } else if (const auto* f = std::get_if<Graph6FileSource>(&source)) {
      if (f->path == "-") {
        in_ = &std::cin;
      } else {
        file_.open(f->path);
        if (!file_) throw Error(ErrorCode::kIo, "cannot open " + f->path);
        in_ = &file_;
      }
    } else {
      in_ = std::get<StreamSource>(source).stream;
    }
  }

  std::optional<Graph> next() {
    if (builtin_) return builtin_->next();
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string_view view = line;
      if (view.rfind(">>graph6<<", 0) == 0) view.remove_prefix(10);
      if (view.empty()) continue;
      try {
        return parse_graph6(view);
      } catch (const Error& e) {
        ++summary_.malformed;
        if (diagnostics_) diagnostics_("line " + std::to_string(line_no_) + ": " + e.what());
      }
    }
    if (in_->bad()) throw Error(ErrorCode::kIo, "read error after line " + std::to_string(line_no_));
    return std::nullopt;
  }

 private:
  const LineSink& diagnostics_;
  ScanSummary& summary_;
  std::optional<LabeledGraphStream> builtin_;
  std::ifstream file_;
  std::istream* in_ = nullptr;
  std::uint64_t line_no_ = 0;
};

void evaluate_batch(const ScanTarget& target, const std::vector<WorkItem>& batch,
                    std::vector<std::optional<ScanRecord>>& results, int jobs) {
  results.assign(batch.size(), std::nullopt);
  auto work = [&](std::size_t i) {
    ScanRecord r;
    r.seq = batch[i].seq;
    if (evaluate_graph(target, batch[i].graph, r)) results[i] = std::move(r);
  };
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(jobs), batch.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < batch.size(); i = next++) work(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = batch.size();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

ScanSummary run_scan(const ScanConfig& config, const LineSink& out, const LineSink& diagnostics) {
  config.validate();
  ScanSummary summary;
  summary.target = config.target.name();
  GraphSource source(config.source, diagnostics, summary);

  std::vector<WorkItem> batch;
  std::vector<std::optional<ScanRecord>> results;
  std::uint64_t seq = 0;
  bool done = false;
  while (!done) {
    batch.clear();
    while (batch.size() < kBatchSize) {
      auto g = source.next();
      if (!g) {
        done = true;
        break;
      }
      batch.push_back({seq++, std::move(*g)});
    }
    evaluate_batch(config.target, batch, results, config.jobs);

    // Results are merged in input order, so output does not depend on jobs.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++summary.seen;
      if (!results[i]) continue;
      const ScanRecord& r = *results[i];
      ++summary.filtered;
      if (r.real_rooted) ++summary.real_rooted;
      if (r.counterexample) {
        if (!confirm_counterexample(config.target, batch[i].graph, r)) {
          throw Error(ErrorCode::kInternal, "counterexample " + r.graph6 + " failed the subset-oracle double-check");
        }
        ++summary.counterexamples;
      }
      if (r.hit) ++summary.hits;
      const bool emit = config.emit == EmitPolicy::kAll ||
                        (config.emit == EmitPolicy::kHits && (r.counterexample || r.hit));
      if (emit && out) out(to_json(r).dump());
    }
  }
  if (out) out(to_json(summary).dump());
  return summary;
}

}  // namespace cliquelab
