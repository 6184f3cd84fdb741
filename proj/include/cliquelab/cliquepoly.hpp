// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <vector>

#include "cliquelab/graph.hpp"
#include "cliquelab/polynomial.hpp"
#include "cliquelab/roots.hpp"

namespace cliquelab {

/// [c_0, c_1, ..., c_ω]: number of k-vertex cliques, c_0 = 1.
using CliqueVector = std::vector<Integer>;

/// Pivoting clique enumeration. Every recursion leaf carries a set of held
/// vertices H and a set of pairwise adjacent pivots P, and stands for the
/// cliques H ∪ S, S ⊆ P, each clique exactly once; the leaf adds
/// binom(|P|, j) to c_{|H|+j}. Pivot: maximum |P ∩ N(u)|, lowest id on ties.
CliqueVector clique_counts(const Graph& g);

/// Tests every vertex subset for pairwise adjacency. Exponential; for
/// cross-checks and counterexample confirmation only.
CliqueVector clique_counts_by_subsets(const Graph& g);

IntPolynomial clique_polynomial(const Graph& g);
IntPolynomial to_polynomial(const CliqueVector& counts);

/// Largest n accepted by the memoized recurrence path.
inline constexpr int kMaxRecurrenceVertices = 20;

/// C(G[S]) = C(G[S] - v) + x·C(G[S ∩ N(v)]) on the lowest vertex v of S,
/// memoized by vertex mask. Throws Error(kUnsupportedSize) above
/// kMaxRecurrenceVertices.
IntPolynomial clique_polynomial_via_vertex_recurrence(const Graph& g);

/// C(G) = C(G - v) + x·C(G[N(v)]) as an exact identity.
bool vertex_recurrence_check(const Graph& g, Vertex v);
/// C(G) = C(G - e) + x²·C(G[N(e)]). Throws Error(kInput) if e is not an edge.
bool edge_recurrence_check(const Graph& g, const Edge& e);

/// Σ_v C(G[N(v)]); equals C'(G).
IntPolynomial vertex_link_sum(const Graph& g);
/// Σ_{e ∈ E} C(G[N(e)]); equals C''(G) / 2.
IntPolynomial edge_link_sum(const Graph& g);

/// Outcome of all four identities on one graph.
struct IdentityCheck {
  bool vertex_recurrence = true;  // every vertex
  bool edge_recurrence = true;    // every edge
  bool vertex_derivative = true;  // C' = vertex_link_sum
  bool edge_derivative = true;    // C''/2 = edge_link_sum

  bool all() const { return vertex_recurrence && edge_recurrence && vertex_derivative && edge_derivative; }
};

IdentityCheck check_identities(const Graph& g);
/// Same checks with every clique polynomial taken from the subset oracle.
IdentityCheck check_identities_by_subsets(const Graph& g);

RootReport clique_root_report(const Graph& g);

}  // namespace cliquelab
