// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include "cliquelab/cliquepoly.hpp"

#include <array>
#include <bit>
#include <unordered_map>

#include "cliquelab/error.hpp"

namespace cliquelab {

namespace {

using Counts = std::array<std::uint64_t, kMaxVertices + 1>;

// binom(64, 32) < 2^64, so the whole table fits.
const auto& binomials() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> t{};
    for (int n = 0; n <= kMaxVertices; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

void pivot_count(const Graph& g, VertexMask candidates, int held, int pivots, Counts& counts) {
  if (candidates == 0) {
    const auto& row = binomials()[static_cast<std::size_t>(pivots)];
    for (int j = 0; j <= pivots; ++j) counts[static_cast<std::size_t>(held + j)] += row[static_cast<std::size_t>(j)];
    return;
  }
  Vertex pivot = -1;
  int best = -1;
  for (VertexMask rest = candidates; rest != 0; rest &= rest - 1) {
    const Vertex u = std::countr_zero(rest);
    const int links = std::popcount(candidates & g.neighbor_mask(u));
    if (links > best) {
      best = links;
      pivot = u;
    }
  }
  // Cliques avoiding every non-neighbor of the pivot: the pivot is optional.
  pivot_count(g, candidates & g.neighbor_mask(pivot), held, pivots + 1, counts);
  // Cliques through a non-neighbor v of the pivot, v the first such vertex.
  VertexMask remaining = candidates & ~(VertexMask{1} << pivot);
  for (VertexMask rest = remaining & ~g.neighbor_mask(pivot); rest != 0; rest &= rest - 1) {
    const Vertex v = std::countr_zero(rest);
    pivot_count(g, remaining & g.neighbor_mask(v), held + 1, pivots, counts);
    remaining &= ~(VertexMask{1} << v);
  }
}

CliqueVector trim(const Counts& counts) {
  std::size_t top = counts.size();
  while (top > 1 && counts[top - 1] == 0) --top;
  CliqueVector out;
  out.reserve(top);
  for (std::size_t k = 0; k < top; ++k) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(std::uint64_t), 0, 0, &counts[k]);
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace

CliqueVector clique_counts(const Graph& g) {
  Counts counts{};
  pivot_count(g, g.vertex_mask(), 0, 0, counts);
  return trim(counts);
}

CliqueVector clique_counts_by_subsets(const Graph& g) {
  const int n = g.order();
  if (n > 30) throw Error(ErrorCode::kUnsupportedSize, "subset enumeration limited to 30 vertices");
  Counts counts{};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool clique = true;
    for (VertexMask rest = s; rest != 0 && clique; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      clique = ((s & ~(VertexMask{1} << v)) & ~g.neighbor_mask(v)) == 0;
    }
    if (clique) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  return trim(counts);
}

IntPolynomial to_polynomial(const CliqueVector& counts) { return IntPolynomial(counts); }

IntPolynomial clique_polynomial(const Graph& g) { return to_polynomial(clique_counts(g)); }

int clique_number(const Graph& g) { return static_cast<int>(clique_counts(g).size()) - 1; }

namespace {

const IntPolynomial& recurrence(const Graph& g, VertexMask s, std::unordered_map<VertexMask, IntPolynomial>& memo) {
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  IntPolynomial result{1};
  if (s != 0) {
    const Vertex v = std::countr_zero(s);
    const VertexMask rest = s & ~(VertexMask{1} << v);
    IntPolynomial without = recurrence(g, rest, memo);
    result = without + shift_up(recurrence(g, rest & g.neighbor_mask(v), memo), 1);
  }
  return memo.emplace(s, std::move(result)).first->second;
}

}  // namespace

IntPolynomial clique_polynomial_via_vertex_recurrence(const Graph& g) {
  if (g.order() > kMaxRecurrenceVertices) {
    throw Error(ErrorCode::kUnsupportedSize,
                "vertex recurrence limited to " + std::to_string(kMaxRecurrenceVertices) + " vertices");
  }
  std::unordered_map<VertexMask, IntPolynomial> memo;
  return recurrence(g, g.vertex_mask(), memo);
}

namespace {

template <typename Counter>
IntPolynomial poly_with(const Counter& counter, const Graph& g) {
  return to_polynomial(counter(g));
}

template <typename Counter>
bool vertex_recurrence_with(const Counter& counter, const Graph& g, Vertex v) {
  const IntPolynomial link = poly_with(counter, induced_subgraph(g, neighborhood(g, v)));
  return poly_with(counter, g) == poly_with(counter, delete_vertex(g, v)) + shift_up(link, 1);
}

template <typename Counter>
bool edge_recurrence_with(const Counter& counter, const Graph& g, const Edge& e) {
  const IntPolynomial link = poly_with(counter, induced_subgraph(g, edge_neighborhood(g, e)));
  return poly_with(counter, g) == poly_with(counter, delete_edge(g, e)) + shift_up(link, 2);
}

template <typename Counter>
IntPolynomial vertex_link_sum_with(const Counter& counter, const Graph& g) {
  IntPolynomial sum;
  for (Vertex v = 0; v < g.order(); ++v) sum += poly_with(counter, induced_subgraph(g, neighborhood(g, v)));
  return sum;
}

template <typename Counter>
IntPolynomial edge_link_sum_with(const Counter& counter, const Graph& g) {
  IntPolynomial sum;
  for (const Edge& e : g.edges()) sum += poly_with(counter, induced_subgraph(g, edge_neighborhood(g, e)));
  return sum;
}

template <typename Counter>
IdentityCheck check_identities_with(const Counter& counter, const Graph& g) {
  IdentityCheck out;
  const IntPolynomial c = poly_with(counter, g);
  for (Vertex v = 0; v < g.order() && out.vertex_recurrence; ++v) {
    out.vertex_recurrence = vertex_recurrence_with(counter, g, v);
  }
  for (const Edge& e : g.edges()) {
    if (!edge_recurrence_with(counter, g, e)) {
      out.edge_recurrence = false;
      break;
    }
  }
  out.vertex_derivative = derivative(c) == vertex_link_sum_with(counter, g);
  // C''/2 has integer coefficients binom(k, 2)·c_k.
  const IntPolynomial second = derivative(derivative(c));
  std::vector<Integer> half(second.coeffs().begin(), second.coeffs().end());
  for (auto& x : half) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 2);
  out.edge_derivative = IntPolynomial(std::move(half)) == edge_link_sum_with(counter, g);
  return out;
}

const auto kPivoting = [](const Graph& g) { return clique_counts(g); };
const auto kSubsets = [](const Graph& g) { return clique_counts_by_subsets(g); };

}  // namespace

bool vertex_recurrence_check(const Graph& g, Vertex v) { return vertex_recurrence_with(kPivoting, g, v); }
bool edge_recurrence_check(const Graph& g, const Edge& e) { return edge_recurrence_with(kPivoting, g, e); }
IntPolynomial vertex_link_sum(const Graph& g) { return vertex_link_sum_with(kPivoting, g); }
IntPolynomial edge_link_sum(const Graph& g) { return edge_link_sum_with(kPivoting, g); }
IdentityCheck check_identities(const Graph& g) { return check_identities_with(kPivoting, g); }
IdentityCheck check_identities_by_subsets(const Graph& g) { return check_identities_with(kSubsets, g); }

RootReport clique_root_report(const Graph& g) { return isolate_real_roots(clique_polynomial(g)); }

}  // namespace cliquelab
