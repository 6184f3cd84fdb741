// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.
//
// Command-line front end. Talks to the library only through its C API.

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cliquelab/cliquelab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct GraphDeleter {
  void operator()(cliquelab_graph* g) const { cliquelab_graph_free(g); }
};
using GraphHandle = std::unique_ptr<cliquelab_graph, GraphDeleter>;

struct ConfigDeleter {
  void operator()(cliquelab_scan_config* c) const { cliquelab_scan_config_free(c); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { cliquelab_string_free(ptr); }
};

struct InputError {
  std::string message;
};

void check(cliquelab_status status, const std::string& context = {}) {
  if (status != CLIQUELAB_OK) {
    throw InputError{(context.empty() ? "" : context + ": ") + cliquelab_status_name(status) + ": " +
                     cliquelab_last_error()};
  }
}

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError{"cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

// Input is an edge list when its first non-blank line is a bare integer
// (digits never occur in graph6), otherwise one graph6 string per line.
std::vector<GraphHandle> read_graphs(const std::string& path) {
  const std::string text = read_all(path);
  std::istringstream lines(text);
  std::string line;
  std::vector<std::string> content;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!is_blank(line)) content.push_back(line);
  }
  std::vector<GraphHandle> graphs;
  if (content.empty()) return graphs;
  const std::string& first = content.front();
  const auto first_tok = first.find_first_not_of(" \t");
  const auto last_tok = first.find_last_not_of(" \t");
  bool numeric = true;
  for (std::size_t i = first_tok; i <= last_tok; ++i) numeric = numeric && std::isdigit(static_cast<unsigned char>(first[i]));
  if (numeric) {
    cliquelab_graph* g = nullptr;
    check(cliquelab_graph_from_edge_list_text(text.c_str(), &g), "edge list");
    graphs.emplace_back(g);
    return graphs;
  }
  std::size_t line_no = 0;
  for (std::string& l : content) {
    ++line_no;
    if (l.rfind(">>graph6<<", 0) == 0) l.erase(0, 10);
    cliquelab_graph* g = nullptr;
    check(cliquelab_graph_from_graph6(l.c_str(), &g), "graph " + std::to_string(line_no));
    graphs.emplace_back(g);
  }
  return graphs;
}

int default_jobs() {
  if (const char* env = std::getenv("CLIQUELAB_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

void print_line(const char* line, void*) { std::cout << line << '\n'; }
void print_diagnostic(const char* line, void*) { std::cerr << line << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliquelab: clique polynomials, exact real roots and conjecture scans"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cliquelab_version());

  std::string input;
  std::string poly_text;
  std::string claim;
  std::string family_path;
  bool stress = false;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  std::string target;
  int n = -1;
  int jobs = 0;
  std::string emit = "summary";
  bool connected = false;
  bool trees = false;

  auto* poly = app.add_subcommand("poly", "Clique polynomial coefficients of each input graph");
  poly->add_option("-i,--input", input, "Graph file (edge list or graph6 lines); default stdin");

  auto* roots = app.add_subcommand("roots", "Exact real-root report (JSON) of each input graph");
  roots->add_option("-i,--input", input, "Graph file; default stdin");
  roots->add_option("--poly", poly_text, "Analyze a coefficient list such as [1,6,11,7,1] instead");

  auto* props = app.add_subcommand("props", "Structural predicates (JSON) of each input graph");
  props->add_option("-i,--input", input, "Graph file; default stdin");

  auto* lemma = app.add_subcommand("lemma", "Evaluate the interlacing lemma on a polynomial family");
  lemma->add_option("-i,--input", family_path, "Family file, one coefficient list per line; default stdin");
  lemma->add_flag("--stress", stress, "Run the seeded random-family stress test instead");
  lemma->add_option("--seed", seed, "Stress seed")->capture_default_str();
  lemma->add_option("--trials", trials, "Stress trials")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a claim on each input graph (JSON lines)");
  verify->add_option("--claim", claim, "TREE, FOREST, TRIANGLE_FREE, K4_CHORDAL, K5_BICHORDAL or CHORDAL_MULT")
      ->required();
  verify->add_option("-i,--input", input, "Graph file; default stdin");

  auto* scan = app.add_subcommand("scan", "Scan a graph family against a conjecture, claim or identity");
  scan->add_option("--target", target, "conj1, conj2, conj3[:l], quest1, prop:<claim> or identities")->required();
  auto* n_opt = scan->add_option("--n", n, "Scan every labeled graph on n <= 7 vertices");
  auto* input_opt = scan->add_option("-i,--input", input, "graph6 file, '-' for stdin");
  n_opt->excludes(input_opt);
  scan->add_option("-j,--jobs", jobs, "Worker threads (default: CLIQUELAB_JOBS or 1)");
  scan->add_option("--emit", emit, "all, hits or summary")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Print labeled graphs on n vertices as graph6");
  enumerate->add_option("--n", n, "Vertex count")->required();
  enumerate->add_flag("--connected", connected, "Connected graphs only");
  enumerate->add_flag("--trees", trees, "Labeled trees (Prüfer order) instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kExitUsage;
  }

  try {
    if (poly->parsed()) {
      for (const auto& g : read_graphs(input)) {
        OwnedString s;
        check(cliquelab_clique_polynomial(g.get(), &s.ptr));
        std::cout << s.ptr << '\n';
      }
      return kExitOk;
    }
    if (roots->parsed()) {
      if (!poly_text.empty()) {
        OwnedString s;
        check(cliquelab_polynomial_roots_json(poly_text.c_str(), &s.ptr), "polynomial");
        std::cout << s.ptr << '\n';
        return kExitOk;
      }
      for (const auto& g : read_graphs(input)) {
        OwnedString s;
        check(cliquelab_graph_roots_json(g.get(), &s.ptr));
        std::cout << s.ptr << '\n';
      }
      return kExitOk;
    }
    if (props->parsed()) {
      for (const auto& g : read_graphs(input)) {
        OwnedString s;
        check(cliquelab_graph_properties_json(g.get(), &s.ptr));
        std::cout << s.ptr << '\n';
      }
      return kExitOk;
    }
    if (lemma->parsed()) {
      OwnedString s;
      if (stress) {
        std::uint64_t violations = 0;
        check(cliquelab_lemma_stress_json(seed, trials, &violations, &s.ptr), "stress");
        std::cout << s.ptr << '\n';
        return violations == 0 ? kExitOk : kExitCounterexample;
      }
      int violation = 0;
      check(cliquelab_lemma_json(read_all(family_path).c_str(), &violation, &s.ptr), "family");
      std::cout << s.ptr << '\n';
      return violation ? kExitCounterexample : kExitOk;
    }
    if (verify->parsed()) {
      bool failed = false;
      for (const auto& g : read_graphs(input)) {
        OwnedString s;
        int conclusion = -1;
        check(cliquelab_verify_json(g.get(), claim.c_str(), &conclusion, &s.ptr));
        failed = failed || conclusion == 0;
        std::cout << s.ptr << '\n';
      }
      return failed ? kExitCounterexample : kExitOk;
    }
    if (scan->parsed()) {
      if (n < 0 && input.empty()) throw InputError{"scan needs --n or --input"};
      cliquelab_scan_config* raw = nullptr;
      check(cliquelab_scan_config_create(target.c_str(), &raw), "target");
      std::unique_ptr<cliquelab_scan_config, ConfigDeleter> config(raw);
      if (n >= 0) {
        check(cliquelab_scan_config_set_builtin(config.get(), n), "--n");
      } else {
        check(cliquelab_scan_config_set_input(config.get(), input.c_str()), "--input");
      }
      check(cliquelab_scan_config_set_jobs(config.get(), jobs > 0 ? jobs : default_jobs()), "--jobs");
      check(cliquelab_scan_config_set_emit(config.get(), emit.c_str()), "--emit");
      cliquelab_scan_summary summary{};
      check(cliquelab_scan_run(config.get(), print_line, print_diagnostic, nullptr, &summary), "scan");
      std::cout.flush();
      return summary.counterexamples == 0 ? kExitOk : kExitCounterexample;
    }
    if (enumerate->parsed()) {
      unsigned flags = 0;
      if (connected) flags |= CLIQUELAB_ENUM_CONNECTED;
      if (trees) flags |= CLIQUELAB_ENUM_TREES;
      check(cliquelab_enumerate(
                n, flags,
                [](const char* g6, void*) {
                  std::cout << g6 << '\n';
                  return 0;
                },
                nullptr),
            "enumerate");
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "cliquelab: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
