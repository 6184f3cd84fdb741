// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include <doctest.h>

#include <set>

#include "cliquelab/error.hpp"
#include "cliquelab/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cliquelab;

namespace {

Graph6Error graph6_error(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Graph6ParseError& e) {
    return e.kind();
  }
  FAIL("expected a graph6 parse error for " << text);
  return Graph6Error::kMalformedSize;
}

}  // namespace

TEST_CASE("graph6 parsing") {
  CHECK(parse_graph6("D??") == Graph(5));
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6("Bg") == path_graph(3));
  CHECK(parse_graph6("E~fG") == fixtures::wheel_plus_chord());
  CHECK(parse_graph6("?") == Graph(0));
}

TEST_CASE("graph6 parse errors carry kind and offset") {
  CHECK(graph6_error("") == Graph6Error::kMalformedSize);
  CHECK(graph6_error(" ") == Graph6Error::kMalformedSize);
  CHECK(graph6_error("~?@c") == Graph6Error::kTooManyVertices);
  CHECK(graph6_error("B ") == Graph6Error::kInvalidCharacter);
  CHECK(graph6_error("D?") == Graph6Error::kTruncated);
  CHECK(graph6_error("Bww") == Graph6Error::kTrailingGarbage);
  try {
    parse_graph6("D?\x7f");
  } catch (const Graph6ParseError& e) {
    CHECK(e.kind() == Graph6Error::kInvalidCharacter);
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("Bwx");
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(e.code() == ErrorCode::kParse);
  }
}

TEST_CASE("graph6 output") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(Graph(5)) == "D??");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(fixtures::wheel_plus_chord()) == "E~fG");
  CHECK_THROWS_AS(to_graph6(Graph(63)), Error);
  CHECK(to_graph6(complete_graph(62)).size() == 1 + (62 * 61 / 2 + 5) / 6);
}

TEST_CASE("graph6 round-trips every labeled graph up to 7 vertices") {
  for (int n = 0; n <= 7; ++n) {
    LabeledGraphStream stream(n);
    while (auto g = stream.next()) {
      if (parse_graph6(to_graph6(*g)) != *g) {
        FAIL("round-trip failed for n=" << n);
      }
    }
  }
}

TEST_CASE("edge lists") {
  const Graph k3 = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3 == complete_graph(3));
  CHECK(from_edge_list(2, {}) == Graph(2));
  CHECK(from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}}).size() == 1);
  CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(from_edge_list(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(from_edge_list(3, {{-1, 1}}), Error);

  const Graph w = fixtures::wheel_plus_chord();
  CHECK(w.order() == 6);
  CHECK(w.size() == 11);
  CHECK(parse_edge_list(to_edge_list(w)) == w);
  CHECK(parse_edge_list("3\n0 1\n\n1 2\r\n") == path_graph(3));
  CHECK_THROWS_AS(parse_edge_list(""), Error);
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), Error);
}

TEST_CASE("vertex sets validate ordering") {
  CHECK_THROWS_AS(VertexSet({2, 1}), Error);
  CHECK_THROWS_AS(VertexSet({1, 1}), Error);
  CHECK(VertexSet::from_mask(0b1011) == VertexSet({0, 1, 3}));
}

TEST_CASE("neighborhoods") {
  CHECK(neighborhood(complete_graph(3), 0) == VertexSet({1, 2}));
  CHECK(neighborhood(path_graph(3), 1) == VertexSet({0, 2}));
  CHECK(neighborhood(Graph(1), 0).empty());
  CHECK_THROWS_AS(neighborhood(Graph(1), 1), Error);

  CHECK(edge_neighborhood(complete_graph(3), Edge(0, 1)) == VertexSet({2}));
  CHECK(edge_neighborhood(cycle_graph(4), Edge(1, 2)).empty());
  CHECK(edge_neighborhood(complete_graph(4), Edge(0, 1)) == VertexSet({2, 3}));
  CHECK_THROWS_AS(edge_neighborhood(path_graph(3), Edge(0, 2)), Error);
}

TEST_CASE("induced subgraphs and deletions") {
  CHECK(induced_subgraph(complete_graph(4), VertexSet({0, 1, 2})) == complete_graph(3));
  CHECK(induced_subgraph(complete_graph(4), VertexSet{}) == Graph(0));
  CHECK(induced_subgraph(cycle_graph(5), VertexSet({0, 1, 2})) == path_graph(3));
  CHECK(induced_subgraph(cycle_graph(5), VertexSet({1, 3, 4})) == from_edge_list(3, {{1, 2}}));
  CHECK_THROWS_AS(induced_subgraph(cycle_graph(5), VertexSet({4, 5})), Error);

  CHECK(delete_vertex(complete_graph(3), 1) == complete_graph(2));
  CHECK(delete_edge(complete_graph(3), Edge(0, 2)) == path_graph(3));
  CHECK(delete_edge(path_graph(2), Edge(0, 1)) == Graph(2));
  CHECK_THROWS_AS(delete_edge(path_graph(3), Edge(0, 2)), Error);
  CHECK_THROWS_AS(delete_vertex(path_graph(3), 3), Error);

  LabeledGraphStream stream(5);
  while (auto g = stream.next()) {
    CHECK(induced_subgraph(*g, VertexSet::from_mask(g->vertex_mask())) == *g);
    for (Vertex v = 0; v < g->order(); ++v) {
      CHECK(g->size() == delete_vertex(*g, v).size() + g->degree(v));
    }
  }
}

TEST_CASE("connectivity and components") {
  CHECK(is_connected(complete_graph(3)));
  CHECK(components(complete_graph(3)) == std::vector<VertexSet>{VertexSet({0, 1, 2})});
  const Graph two_edges = from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));
  CHECK(components(two_edges).size() == 2);
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));
  CHECK(components(Graph(0)).empty());
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(complete_graph(4)) == 3);
  CHECK(vertex_connectivity(cycle_graph(4)) == 2);
  CHECK(vertex_connectivity(path_graph(3)) == 1);
  CHECK(vertex_connectivity(Graph(0)) == 0);
  CHECK(vertex_connectivity(Graph(1)) == 0);
  CHECK(vertex_connectivity(Graph(3)) == 0);
  CHECK(vertex_connectivity(fixtures::wheel_plus_chord()) == 3);
  CHECK(is_k_connected(fixtures::wheel_plus_chord(), 2));
  CHECK_FALSE(is_k_connected(complete_graph(3), 3));
}

TEST_CASE("vertex connectivity matches minimum separating sets for n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    LabeledGraphStream stream(n);
    while (auto g = stream.next()) {
      const int expected = oracle::vertex_connectivity(*g);
      if (vertex_connectivity(*g) != expected) FAIL("κ mismatch on " << to_graph6(*g));
      for (int k = 0; k <= n; ++k) {
        if (is_k_connected(*g, k) != (expected >= k)) FAIL("is_k_connected mismatch on " << to_graph6(*g));
      }
    }
  }
}

TEST_CASE("chordality") {
  CHECK_FALSE(is_chordal(cycle_graph(4)).chordal);
  CHECK_FALSE(is_chordal(cycle_graph(4)).elimination_order.has_value());
  const auto k4 = is_chordal(complete_graph(4));
  CHECK(k4.chordal);
  REQUIRE(k4.elimination_order);
  CHECK(k4.elimination_order->size() == 4);
  CHECK_FALSE(is_chordal(fixtures::wheel_plus_chord()).chordal);
  // 1, 3, 4, 5 induce a chordless 4-cycle.
  CHECK_FALSE(oracle::is_chordal(induced_subgraph(fixtures::wheel_plus_chord(), VertexSet({1, 3, 4, 5}))));
  CHECK(is_chordal(Graph(0)).chordal);
}

TEST_CASE("chordality matches induced-cycle search for all graphs n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    LabeledGraphStream stream(n);
    while (auto g = stream.next()) {
      const auto r = is_chordal(*g);
      if (r.chordal != oracle::is_chordal(*g)) FAIL("chordality mismatch on " << to_graph6(*g));
      if (r.chordal) {
        // Each vertex's later neighbours in the ordering form a clique.
        const auto& order = *r.elimination_order;
        std::set<Vertex> later(order.begin(), order.end());
        for (Vertex v : order) {
          later.erase(v);
          std::vector<int> nb;
          for (Vertex u : later) {
            if (g->adjacent(u, v)) nb.push_back(u);
          }
          if (!oracle::is_clique(*g, nb)) FAIL("bad elimination order on " << to_graph6(*g));
        }
      }
    }
  }
}

TEST_CASE("clique predicates") {
  CHECK(clique_number(complete_graph(4)) == 4);
  CHECK_FALSE(is_kr_free(complete_graph(4), 4));
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(is_triangle_free(cycle_graph(5)));
  CHECK_FALSE(is_triangle_free(complete_graph(3)));
  const Graph w = fixtures::wheel_plus_chord();
  CHECK(clique_number(w) == 4);
  CHECK(is_kr_free(w, 5));
  CHECK(max_triangles_per_edge(w) == 3);
  CHECK(edge_neighborhood(w, Edge(0, 1)) == VertexSet({2, 3, 5}));
  CHECK(max_triangles_per_edge(Graph(4)) == 0);
  CHECK(clique_number(Graph(0)) == 0);
}

TEST_CASE("labeled graph enumeration") {
  CHECK(enumerate_labeled_graphs(3).size() == 8);
  CHECK(enumerate_labeled_graphs(3, [](const Graph& g) { return is_connected(g); }).size() == 4);
  CHECK(enumerate_labeled_graphs(2).size() == 2);
  CHECK_THROWS_AS(LabeledGraphStream(8), Error);

  // Lexicographic in the upper-triangle bit string: first pair (0,1) is the
  // most significant bit, so the first graph is empty and the last complete.
  const auto all4 = enumerate_labeled_graphs(4);
  CHECK(all4.front() == Graph(4));
  CHECK(all4.back() == complete_graph(4));
  CHECK(all4[1] == from_edge_list(4, {{2, 3}}));

  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> seen;
    LabeledGraphStream stream(n);
    std::uint64_t count = 0;
    while (auto g = stream.next()) {
      seen.insert(to_graph6(*g));
      ++count;
    }
    CHECK(count == (std::uint64_t{1} << (n * (n - 1) / 2)));
    CHECK(seen.size() == count);
  }
}

TEST_CASE("labeled tree enumeration") {
  CHECK(enumerate_labeled_trees(2).size() == 1);
  CHECK(enumerate_labeled_trees(3).size() == 3);
  CHECK(enumerate_labeled_trees(4).size() == 16);
  CHECK_THROWS_AS(LabeledTreeStream(1), Error);
  for (int n = 2; n <= 6; ++n) {
    std::set<std::string> seen;
    for (const Graph& t : enumerate_labeled_trees(n)) {
      CHECK(is_tree(t));
      seen.insert(to_graph6(t));
    }
    std::size_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= static_cast<std::size_t>(n);
    CHECK(seen.size() == expected);
  }
}
