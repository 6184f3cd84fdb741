// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliquelab {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Largest vertex count a Graph can hold (one adjacency word per vertex).
inline constexpr int kMaxVertices = 64;
/// Largest vertex count expressible with a single graph6 size byte.
inline constexpr int kMaxGraph6Vertices = 62;
/// Largest n accepted by the builtin labeled enumeration.
inline constexpr int kMaxEnumerationVertices = 7;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Endpoints are stored with u < v.
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Strictly increasing sequence of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Throws Error(kInput) unless `ids` is strictly increasing and nonnegative.
  explicit VertexSet(std::vector<Vertex> ids);
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

  static VertexSet from_mask(VertexMask mask);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const { return ids_; }
  VertexMask to_mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Neighbor sets are stored as one bit word per vertex, so n is capped at
/// kMaxVertices. Values are immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds from per-vertex neighbor masks. The masks must be symmetric,
  /// loop-free and confined to 0..n-1; violations throw Error(kInput).
  static Graph from_masks(std::vector<VertexMask> masks);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }
  int degree(Vertex v) const;

  VertexMask neighbor_mask(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const VertexMask> masks() const { return adj_; }
  VertexMask vertex_mask() const;

  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> adj_;
  int edge_count_ = 0;
};

// ---- construction -------------------------------------------------------

/// Duplicate pairs collapse. Out-of-range ids and self-loops throw Error(kInput).
Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges);
Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

// ---- text formats -------------------------------------------------------

/// Parses one graph6 line (no trailing newline). Throws Graph6ParseError.
Graph parse_graph6(std::string_view text);
/// Throws Error(kUnsupportedSize) when n > kMaxGraph6Vertices.
std::string to_graph6(const Graph& g);

/// Edge-list text: first line "n", then one "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// ---- local structure ----------------------------------------------------

VertexSet neighborhood(const Graph& g, Vertex v);
/// N(u) ∩ N(v) for an edge e = {u, v}; throws Error(kInput) if e is not an edge.
VertexSet edge_neighborhood(const Graph& g, const Edge& e);
/// Relabels S in ascending order to 0..|S|-1.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, VertexMask s);
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, const Edge& e);

// ---- global structure ---------------------------------------------------

/// The empty graph counts as connected.
bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// κ(G) via unit-capacity max flow on the split-vertex network.
/// κ(K_n) = n-1; disconnected graphs, K_1 and the empty graph give 0.
int vertex_connectivity(const Graph& g);
/// Early-exit test for κ(G) >= k.
bool is_k_connected(const Graph& g, int k);

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering, present only when chordal.
  std::optional<std::vector<Vertex>> elimination_order;
};

/// Maximum Cardinality Search, then verification of the reversed visit
/// order as a perfect elimination ordering.
ChordalityResult is_chordal(const Graph& g);

int clique_number(const Graph& g);
bool is_kr_free(const Graph& g, int r);
bool is_triangle_free(const Graph& g);
/// max over edges e of |N(e)|; 0 for edgeless graphs.
int max_triangles_per_edge(const Graph& g);

// ---- enumeration --------------------------------------------------------

using GraphFilter = std::function<bool(const Graph&)>;

/// All labeled graphs on n vertices in lexicographic order of the
/// upper-triangle bit string (pairs in graph6 order, first pair most
/// significant). Throws Error(kUnsupportedSize) for n > kMaxEnumerationVertices.
class LabeledGraphStream {
 public:
  explicit LabeledGraphStream(int n, GraphFilter filter = {});
  std::optional<Graph> next();
  std::uint64_t total() const { return total_; }

 private:
  int n_;
  GraphFilter filter_;
  std::vector<Edge> pairs_;
  std::uint64_t total_;
  std::uint64_t cursor_ = 0;
};

/// Every labeled tree on n >= 2 vertices, decoded from Prüfer sequences in
/// lexicographic order.
class LabeledTreeStream {
 public:
  explicit LabeledTreeStream(int n);
  std::optional<Graph> next();
  std::uint64_t total() const { return total_; }

 private:
  int n_;
  std::vector<Vertex> code_;
  std::uint64_t total_;
  std::uint64_t cursor_ = 0;
};

std::vector<Graph> enumerate_labeled_graphs(int n, const GraphFilter& filter = {});
std::vector<Graph> enumerate_labeled_trees(int n);

}  // namespace cliquelab
