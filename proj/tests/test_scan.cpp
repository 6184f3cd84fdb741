// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include <doctest.h>

#include <sstream>

#include "cliquelab/error.hpp"
#include "cliquelab/report_json.hpp"
#include "cliquelab/scan.hpp"
#include "fixtures.hpp"

using namespace cliquelab;

namespace {

struct Captured {
  std::vector<std::string> out;
  std::vector<std::string> diag;
  ScanSummary summary;
};

Captured run(ScanConfig config) {
  Captured c;
  c.summary = run_scan(
      config, [&](std::string_view s) { c.out.emplace_back(s); },
      [&](std::string_view s) { c.diag.emplace_back(s); });
  return c;
}

ScanConfig builtin(const char* target, int n, EmitPolicy emit = EmitPolicy::kSummary, int jobs = 1) {
  ScanConfig c;
  c.target = ScanTarget::parse(target);
  c.source = BuiltinSource{n};
  c.emit = emit;
  c.jobs = jobs;
  return c;
}

}  // namespace

TEST_CASE("target parsing") {
  CHECK(ScanTarget::parse("conj1").kind == TargetKind::kConj1);
  CHECK(ScanTarget::parse("CONJ3(2)").connectivity == 2);
  CHECK(ScanTarget::parse("conj3:2").name() == "conj3:2");
  CHECK(ScanTarget::parse("conj3").connectivity == 1);
  CHECK(ScanTarget::parse("prop:k4_chordal").name() == "prop:K4_CHORDAL");
  CHECK(ScanTarget::parse("identities").kind == TargetKind::kIdentities);
  CHECK_THROWS_AS(ScanTarget::parse("conj4"), Error);
  CHECK_THROWS_AS(ScanTarget::parse("conj3:0"), Error);
  CHECK_THROWS_AS(ScanTarget::parse("conj3(2"), Error);
  CHECK_THROWS_AS(ScanTarget::parse("prop:nope"), Error);
  CHECK(parse_emit_policy("hits") == EmitPolicy::kHits);
  CHECK_THROWS_AS(parse_emit_policy("some"), Error);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(builtin("conj1", 8).validate(), Error);
  CHECK_THROWS_AS(builtin("conj1", 3, EmitPolicy::kSummary, 0).validate(), Error);
  ScanConfig s = builtin("conj1", 3);
  s.source = StreamSource{nullptr};
  CHECK_THROWS_AS(s.validate(), Error);
  ScanConfig f = builtin("conj1", 3);
  f.source = Graph6FileSource{"/nonexistent/file.g6"};
  CHECK_THROWS_AS(run(f), Error);
}

TEST_CASE("conj1 over n = 3") {
  const Captured c = run(builtin("conj1", 3));
  CHECK(c.summary.seen == 8);
  CHECK(c.summary.filtered == 4);
  CHECK(c.summary.real_rooted == 4);
  CHECK(c.summary.counterexamples == 0);
  REQUIRE(c.out.size() == 1);
  CHECK(c.out[0] ==
        R"({"summary":{"counterexamples":0,"filtered":4,"hits":0,"malformed":0,"real_rooted":4,"seen":8,"target":"conj1"}})");
}

TEST_CASE("records for every filtered graph") {
  const Captured c = run(builtin("conj1", 3, EmitPolicy::kAll));
  REQUIRE(c.out.size() == 5);
  const auto rec = nlohmann::json::parse(c.out[0]);
  CHECK(rec["graph6"] == to_graph6(from_edge_list(3, {{0, 2}, {1, 2}})));
  CHECK(rec["n"] == 3);
  CHECK(rec["m"] == 2);
  CHECK(rec["coeffs"] == nlohmann::json::array({1, 3, 2}));
  CHECK(rec["real_rooted"] == true);
  CHECK(rec["filters"]["connected"] == true);
  CHECK(rec["flags"]["counterexample"] == false);
  CHECK(nlohmann::json::parse(c.out[3])["coeffs"] == nlohmann::json::array({1, 3, 3, 1}));
  CHECK(run(builtin("conj1", 3, EmitPolicy::kHits)).out.size() == 1);
}

TEST_CASE("quest1 registers the wheel-plus-chord graph as a hit") {
  std::istringstream in(to_graph6(fixtures::wheel_plus_chord()) + "\n" + to_graph6(complete_graph(3)) + "\n");
  ScanConfig config = builtin("quest1", 0, EmitPolicy::kHits);
  config.source = StreamSource{&in};
  const Captured c = run(config);
  CHECK(c.summary.seen == 2);
  CHECK(c.summary.filtered == 1);
  CHECK(c.summary.hits == 1);
  REQUIRE(c.out.size() == 2);
  const auto rec = nlohmann::json::parse(c.out[0]);
  CHECK(rec["coeffs"] == nlohmann::json::array({1, 6, 11, 7, 1}));
  CHECK(rec["flags"]["hit"] == true);
  CHECK(rec["filters"]["non_chordal"] == true);
}

TEST_CASE("identities over n = 4") {
  const Captured c = run(builtin("identities", 4));
  CHECK(c.summary.seen == 64);
  CHECK(c.summary.filtered == 64);
  CHECK(c.summary.counterexamples == 0);
}

TEST_CASE("malformed lines are skipped with a line number") {
  std::istringstream in(">>graph6<<Bw\n\nnot graph6\nBg\r\nBww\n");
  ScanConfig config = builtin("conj1", 0);
  config.source = StreamSource{&in};
  const Captured c = run(config);
  CHECK(c.summary.seen == 2);
  CHECK(c.summary.malformed == 2);
  REQUIRE(c.diag.size() == 2);
  CHECK(c.diag[0].rfind("line 3:", 0) == 0);
  CHECK(c.diag[1].rfind("line 5:", 0) == 0);
}

TEST_CASE("conj2 counterexamples at n = 6 survive the double-check") {
  const Captured c = run(builtin("conj2", 6, EmitPolicy::kHits));
  CHECK(c.summary.counterexamples == 180);
  CHECK(c.out.size() == 181);
  for (std::size_t i = 0; i + 1 < c.out.size(); ++i) {
    const auto rec = nlohmann::json::parse(c.out[i]);
    CHECK(rec["flags"]["counterexample"] == true);
    CHECK(rec["real_rooted"] == false);
    ScanRecord r;
    const Graph g = parse_graph6(rec["graph6"].get<std::string>());
    REQUIRE(evaluate_graph(ScanTarget::parse("conj2"), g, r));
    CHECK(confirm_counterexample(ScanTarget::parse("conj2"), g, r));
  }
}

TEST_CASE("output does not depend on the worker count") {
  for (const char* t : {"conj2", "quest1", "prop:chordal_mult", "identities"}) {
    const Captured a = run(builtin(t, 5, EmitPolicy::kAll, 1));
    const Captured b = run(builtin(t, 5, EmitPolicy::kAll, 4));
    CHECK(a.out == b.out);
  }
}

TEST_CASE("builtin enumeration and its graph6 dump give the same summary") {
  std::string dump;
  LabeledGraphStream stream(5);
  while (auto g = stream.next()) dump += to_graph6(*g) + "\n";
  for (const char* t : {"conj1", "conj2", "conj3:1", "quest1"}) {
    std::istringstream in(dump);
    ScanConfig config = builtin(t, 0, EmitPolicy::kAll);
    config.source = StreamSource{&in};
    const Captured a = run(builtin(t, 5, EmitPolicy::kAll));
    const Captured b = run(config);
    CHECK(a.summary == b.summary);
    CHECK(a.out == b.out);
  }
}
