// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include "cliquelab/cliquelab.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "cliquelab/cliquepoly.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/interlace.hpp"
#include "cliquelab/report_json.hpp"
#include "cliquelab/scan.hpp"
#include "cliquelab/theorems.hpp"

struct cliquelab_graph {
  cliquelab::Graph graph;
};

struct cliquelab_scan_config {
  cliquelab::ScanConfig config;
};

namespace {

thread_local std::string last_error;

cliquelab_status status_of(cliquelab::ErrorCode code) {
  using cliquelab::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return CLIQUELAB_ERR_PARSE;
    case ErrorCode::kInput: return CLIQUELAB_ERR_INPUT;
    case ErrorCode::kUnsupportedSize: return CLIQUELAB_ERR_UNSUPPORTED_SIZE;
    case ErrorCode::kZeroPolynomial: return CLIQUELAB_ERR_ZERO_POLYNOMIAL;
    case ErrorCode::kNotSquareFree: return CLIQUELAB_ERR_NOT_SQUARE_FREE;
    case ErrorCode::kNoRealRoot: return CLIQUELAB_ERR_NO_REAL_ROOT;
    case ErrorCode::kIo: return CLIQUELAB_ERR_IO;
    case ErrorCode::kInvalidArgument: return CLIQUELAB_ERR_INVALID_ARGUMENT;
    case ErrorCode::kInternal: return CLIQUELAB_ERR_INTERNAL;
  }
  return CLIQUELAB_ERR_INTERNAL;
}

cliquelab_status fail(cliquelab_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
cliquelab_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return CLIQUELAB_OK;
  } catch (const cliquelab::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CLIQUELAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CLIQUELAB_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw cliquelab::Error(cliquelab::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cliquelab_status make_graph(cliquelab::Graph g, cliquelab_graph** out) {
  *out = new cliquelab_graph{std::move(g)};
  return CLIQUELAB_OK;
}

}  // namespace

extern "C" {

const char* cliquelab_version(void) { return "0.1.0"; }

const char* cliquelab_status_name(cliquelab_status status) {
  switch (status) {
    case CLIQUELAB_OK: return "ok";
    case CLIQUELAB_ERR_PARSE: return "parse error";
    case CLIQUELAB_ERR_INPUT: return "input error";
    case CLIQUELAB_ERR_UNSUPPORTED_SIZE: return "unsupported size";
    case CLIQUELAB_ERR_ZERO_POLYNOMIAL: return "zero polynomial";
    case CLIQUELAB_ERR_NOT_SQUARE_FREE: return "not square-free";
    case CLIQUELAB_ERR_NO_REAL_ROOT: return "no real root";
    case CLIQUELAB_ERR_IO: return "i/o error";
    case CLIQUELAB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CLIQUELAB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cliquelab_last_error(void) { return last_error.c_str(); }

void cliquelab_string_free(char* s) { std::free(s); }

cliquelab_status cliquelab_graph_from_graph6(const char* text, cliquelab_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    make_graph(cliquelab::parse_graph6(text), out);
  });
}

cliquelab_status cliquelab_graph_from_edge_list_text(const char* text, cliquelab_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    make_graph(cliquelab::parse_edge_list(text), out);
  });
}

cliquelab_status cliquelab_graph_from_edges(int n, const int* endpoints, size_t edge_count, cliquelab_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (edge_count > 0) require(endpoints, "endpoints");
    std::vector<std::pair<cliquelab::Vertex, cliquelab::Vertex>> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    make_graph(cliquelab::from_edge_list(n, edges), out);
  });
}

void cliquelab_graph_free(cliquelab_graph* g) { delete g; }

int cliquelab_graph_order(const cliquelab_graph* g) { return g ? g->graph.order() : -1; }

int cliquelab_graph_size(const cliquelab_graph* g) { return g ? g->graph.size() : -1; }

cliquelab_status cliquelab_graph_to_graph6(const cliquelab_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = duplicate(cliquelab::to_graph6(g->graph));
  });
}

cliquelab_status cliquelab_graph_properties_json(const cliquelab_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto& G = g->graph;
    nlohmann::json j = {
        {"n", G.order()},
        {"m", G.size()},
        {"connected", cliquelab::is_connected(G)},
        {"kappa", cliquelab::vertex_connectivity(G)},
        {"chordal", cliquelab::is_chordal(G).chordal},
        {"omega", cliquelab::clique_number(G)},
        {"triangle_free", cliquelab::is_triangle_free(G)},
        {"max_triangles_per_edge", cliquelab::max_triangles_per_edge(G)},
    };
    *out = duplicate(j.dump());
  });
}

cliquelab_status cliquelab_clique_polynomial(const cliquelab_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = duplicate(cliquelab::clique_polynomial(g->graph).to_string());
  });
}

cliquelab_status cliquelab_graph_roots_json(const cliquelab_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = duplicate(cliquelab::to_json(cliquelab::clique_root_report(g->graph)).dump());
  });
}

cliquelab_status cliquelab_polynomial_roots_json(const char* poly, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = duplicate(cliquelab::to_json(cliquelab::isolate_real_roots(cliquelab::parse_polynomial(poly))).dump());
  });
}

cliquelab_status cliquelab_verify_json(const cliquelab_graph* g, const char* claim, int* conclusion, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(claim, "claim");
    require(out, "out");
    const auto result = cliquelab::verify(cliquelab::parse_claim_id(claim), g->graph);
    if (conclusion) *conclusion = result.conclusion_holds ? (*result.conclusion_holds ? 1 : 0) : -1;
    *out = duplicate(cliquelab::to_json(result).dump());
  });
}

cliquelab_status cliquelab_lemma_json(const char* family_text, int* violation, char** out) {
  return guarded([&] {
    require(family_text, "family_text");
    require(out, "out");
    const auto report = cliquelab::analyze_family(cliquelab::parse_family(family_text));
    if (violation) *violation = report.hypothesis_holds && !*report.conclusion_holds ? 1 : 0;
    *out = duplicate(cliquelab::to_json(report).dump());
  });
}

cliquelab_status cliquelab_lemma_stress_json(uint64_t seed, uint64_t trials, uint64_t* violations, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto summary = cliquelab::random_family_stress(seed, trials);
    if (violations) *violations = summary.hypothesis_without_conclusion;
    *out = duplicate(cliquelab::to_json(summary).dump());
  });
}

cliquelab_status cliquelab_enumerate(int n, unsigned flags, cliquelab_graph6_callback callback, void* user) {
  return guarded([&] {
    require(reinterpret_cast<const void*>(callback), "callback");
    if ((flags & CLIQUELAB_ENUM_TREES) != 0) {
      cliquelab::LabeledTreeStream trees(n);
      while (auto t = trees.next()) {
        if (callback(cliquelab::to_graph6(*t).c_str(), user) != 0) return;
      }
      return;
    }
    cliquelab::GraphFilter filter;
    if ((flags & CLIQUELAB_ENUM_CONNECTED) != 0) filter = [](const cliquelab::Graph& g) { return cliquelab::is_connected(g); };
    cliquelab::LabeledGraphStream graphs(n, filter);
    while (auto g = graphs.next()) {
      if (callback(cliquelab::to_graph6(*g).c_str(), user) != 0) return;
    }
  });
}

cliquelab_status cliquelab_scan_config_create(const char* target, cliquelab_scan_config** out) {
  return guarded([&] {
    require(target, "target");
    require(out, "out");
    auto config = std::make_unique<cliquelab_scan_config>();
    config->config.target = cliquelab::ScanTarget::parse(target);
    *out = config.release();
  });
}

void cliquelab_scan_config_free(cliquelab_scan_config* config) { delete config; }

cliquelab_status cliquelab_scan_config_set_builtin(cliquelab_scan_config* config, int n) {
  return guarded([&] {
    require(config, "config");
    config->config.source = cliquelab::BuiltinSource{n};
    config->config.validate();
  });
}

cliquelab_status cliquelab_scan_config_set_input(cliquelab_scan_config* config, const char* path) {
  return guarded([&] {
    require(config, "config");
    require(path, "path");
    config->config.source = cliquelab::Graph6FileSource{path};
  });
}

cliquelab_status cliquelab_scan_config_set_jobs(cliquelab_scan_config* config, int jobs) {
  return guarded([&] {
    require(config, "config");
    if (jobs < 1) throw cliquelab::Error(cliquelab::ErrorCode::kInvalidArgument, "jobs must be >= 1");
    config->config.jobs = jobs;
  });
}

cliquelab_status cliquelab_scan_config_set_emit(cliquelab_scan_config* config, const char* policy) {
  return guarded([&] {
    require(config, "config");
    require(policy, "policy");
    config->config.emit = cliquelab::parse_emit_policy(policy);
  });
}

cliquelab_status cliquelab_scan_run(const cliquelab_scan_config* config, cliquelab_line_callback out,
                                    cliquelab_line_callback diagnostics, void* user, cliquelab_scan_summary* summary) {
  return guarded([&] {
    require(config, "config");
    cliquelab::LineSink out_sink;
    cliquelab::LineSink diag_sink;
    if (out) out_sink = [&](std::string_view line) { out(std::string(line).c_str(), user); };
    if (diagnostics) diag_sink = [&](std::string_view line) { diagnostics(std::string(line).c_str(), user); };
    const auto s = cliquelab::run_scan(config->config, out_sink, diag_sink);
    if (summary) *summary = {s.seen, s.filtered, s.real_rooted, s.counterexamples, s.hits, s.malformed};
  });
}

}  // extern "C"
