// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include "cliquelab/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "cliquelab/error.hpp"

namespace cliquelab {

namespace {

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

constexpr VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : (bit(n) - 1); }

void check_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) {
    throw Error(ErrorCode::kInput, "vertex " + std::to_string(v) + " out of range [0, " +
                                       std::to_string(g.order()) + ")");
  }
}

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kUnsupportedSize,
                "vertex count " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kInput: return "input error";
    case ErrorCode::kUnsupportedSize: return "unsupported size";
    case ErrorCode::kZeroPolynomial: return "zero polynomial";
    case ErrorCode::kNotSquareFree: return "polynomial not square-free";
    case ErrorCode::kNoRealRoot: return "no real root";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown error";
}

const char* to_string(Graph6Error kind) {
  switch (kind) {
    case Graph6Error::kMalformedSize: return "malformed size byte";
    case Graph6Error::kTooManyVertices: return "more than 62 vertices";
    case Graph6Error::kInvalidCharacter: return "character outside 63..126";
    case Graph6Error::kTruncated: return "truncated adjacency payload";
    case Graph6Error::kTrailingGarbage: return "trailing bytes after payload";
  }
  return "unknown graph6 error";
}

Graph6ParseError::Graph6ParseError(Graph6Error kind, std::size_t offset)
    : Error(ErrorCode::kParse,
            std::string("graph6: ") + to_string(kind) + " at byte " + std::to_string(offset)),
      kind_(kind),
      offset_(offset) {}

// ---- VertexSet ----------------------------------------------------------

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] < 0 || (i > 0 && ids_[i] <= ids_[i - 1])) {
      throw Error(ErrorCode::kInput, "vertex set must be strictly increasing and nonnegative");
    }
  }
}

VertexSet VertexSet::from_mask(VertexMask mask) {
  VertexSet s;
  s.ids_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (; mask != 0; mask &= mask - 1) s.ids_.push_back(std::countr_zero(mask));
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexMask VertexSet::to_mask() const {
  VertexMask m = 0;
  for (Vertex v : ids_) {
    if (v >= kMaxVertices) throw Error(ErrorCode::kInput, "vertex id exceeds mask width");
    m |= bit(v);
  }
  return m;
}

// ---- Graph --------------------------------------------------------------

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_masks(std::vector<VertexMask> masks) {
  const int n = static_cast<int>(masks.size());
  check_order(n);
  const VertexMask all = low_mask(n);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const VertexMask m = masks[static_cast<std::size_t>(v)];
    if ((m & ~all) != 0) throw Error(ErrorCode::kInput, "neighbor id out of range");
    if ((m & bit(v)) != 0) throw Error(ErrorCode::kInput, "self-loop at vertex " + std::to_string(v));
    for (VertexMask rest = m; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if ((masks[static_cast<std::size_t>(u)] & bit(v)) == 0) {
        throw Error(ErrorCode::kInput, "asymmetric adjacency between " + std::to_string(u) + " and " +
                                           std::to_string(v));
      }
    }
    degree_sum += std::popcount(m);
  }
  Graph g;
  g.adj_ = std::move(masks);
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return has_vertex(u) && has_vertex(v) && (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(Vertex v) const {
  check_vertex(*this, v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

VertexMask Graph::vertex_mask() const { return low_mask(order()); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (VertexMask rest = adj_[static_cast<std::size_t>(u)] & ~low_mask(u + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

// ---- construction -------------------------------------------------------

Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  check_order(n);
  std::vector<VertexMask> masks(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kInput,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an id outside [0, " +
                      std::to_string(n) + ")");
    }
    if (u == v) throw Error(ErrorCode::kInput, "self-loop at vertex " + std::to_string(u));
    masks[static_cast<std::size_t>(u)] |= bit(v);
    masks[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph::from_masks(std::move(masks));
}

Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph complete_graph(int n) {
  check_order(n);
  std::vector<VertexMask> masks(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) masks[static_cast<std::size_t>(v)] = low_mask(n) & ~bit(v);
  return Graph::from_masks(std::move(masks));
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return from_edge_list(n, e);
}

Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return from_edge_list(n, e);
}

Graph star_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return from_edge_list(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  check_order(na + b.order());
  std::vector<VertexMask> masks(a.masks().begin(), a.masks().end());
  for (VertexMask m : b.masks()) masks.push_back(m << na);
  return Graph::from_masks(std::move(masks));
}

// ---- local structure ----------------------------------------------------

VertexSet neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return VertexSet::from_mask(g.neighbor_mask(v));
}

VertexSet edge_neighborhood(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::kInput, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  return VertexSet::from_mask(g.neighbor_mask(e.u) & g.neighbor_mask(e.v));
}

Graph induced_subgraph(const Graph& g, VertexMask s) {
  if ((s & ~g.vertex_mask()) != 0) throw Error(ErrorCode::kInput, "induced subgraph: vertex out of range");
  std::vector<VertexMask> masks;
  masks.reserve(static_cast<std::size_t>(std::popcount(s)));
  for (VertexMask rest = s; rest != 0; rest &= rest - 1) {
    const VertexMask nb = g.neighbor_mask(std::countr_zero(rest)) & s;
    // Compress the bits of nb selected by s into the low positions.
    VertexMask packed = 0;
    int out = 0;
    for (VertexMask sel = s; sel != 0; sel &= sel - 1, ++out) {
      if ((nb & (sel & -sel)) != 0) packed |= bit(out);
    }
    masks.push_back(packed);
  }
  return Graph::from_masks(std::move(masks));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) check_vertex(g, v);
  return induced_subgraph(g, s.to_mask());
}

Graph delete_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.vertex_mask() & ~bit(v));
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::kInput, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  std::vector<VertexMask> masks(g.masks().begin(), g.masks().end());
  masks[static_cast<std::size_t>(e.u)] &= ~bit(e.v);
  masks[static_cast<std::size_t>(e.v)] &= ~bit(e.u);
  return Graph::from_masks(std::move(masks));
}

// ---- global structure ---------------------------------------------------

namespace {

VertexMask reach(const Graph& g, Vertex start, VertexMask allowed) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.neighbor_mask(std::countr_zero(rest));
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach(g, 0, g.vertex_mask()) == g.vertex_mask();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexMask left = g.vertex_mask();
  while (left != 0) {
    const VertexMask comp = reach(g, std::countr_zero(left), g.vertex_mask());
    out.push_back(VertexSet::from_mask(comp));
    left &= ~comp;
  }
  return out;
}

bool is_forest(const Graph& g) {
  return g.size() == g.order() - static_cast<int>(components(g).size());
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

namespace {

// Internally vertex-disjoint s-t paths, stopping once `limit` are found.
// Each vertex v other than s, t is split into v_in -> v_out with capacity 1;
// undirected edges become pairs of arcs of unbounded capacity between
// out- and in-copies. Node ids: in(v) = v, out(v) = n + v.
int disjoint_paths(const Graph& g, Vertex s, Vertex t, int limit) {
  const int n = g.order();
  const int nodes = 2 * n;
  // Residual capacities on a dense matrix; n <= 64 keeps this small.
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
  const int big = n + 1;
  for (Vertex v = 0; v < n; ++v) {
    at(v, n + v) = (v == s || v == t) ? big : 1;
    for (VertexMask rest = g.neighbor_mask(v); rest != 0; rest &= rest - 1) {
      at(n + v, std::countr_zero(rest)) = big;
    }
  }
  const int source = n + s;  // out-copy of s
  const int sink = t;        // in-copy of t
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[static_cast<std::size_t>(sink)] < 0) {
      const int a = q.front();
      q.pop();
      for (int b = 0; b < nodes; ++b) {
        if (parent[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
          parent[static_cast<std::size_t>(b)] = a;
          q.push(b);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) break;
    for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
      const int a = parent[static_cast<std::size_t>(b)];
      at(a, b) -= 1;
      at(b, a) += 1;
    }
    ++flow;
  }
  return flow;
}

// min(κ(G), limit).
int connectivity_up_to(const Graph& g, int limit) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = std::min(n - 1, limit);  // complete-graph convention
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      // κ(s,t) <= min(deg s, deg t) for non-adjacent s, t.
      const int cap = std::min({best, g.degree(s), g.degree(t)});
      best = std::min(best, disjoint_paths(g, s, t, cap));
      if (best == 0) return 0;
    }
  }
  return best;
}

}  // namespace

int vertex_connectivity(const Graph& g) { return connectivity_up_to(g, kMaxVertices); }

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.order() <= k) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < k) return false;
  }
  return connectivity_up_to(g, k) >= k;
}

ChordalityResult is_chordal(const Graph& g) {
  const int n = g.order();
  // Maximum Cardinality Search: repeatedly visit the unvisited vertex with
  // the most visited neighbors (lowest id on ties).
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));
  VertexMask visited = 0;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if ((visited & bit(v)) == 0 && (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])) {
        best = v;
      }
    }
    visit.push_back(best);
    visited |= bit(best);
    for (VertexMask rest = g.neighbor_mask(best) & ~visited; rest != 0; rest &= rest - 1) {
      ++weight[static_cast<std::size_t>(std::countr_zero(rest))];
    }
  }
  // The reverse visit order is a perfect elimination ordering iff G is
  // chordal: the neighbors of each vertex that come later in it must form
  // a clique.
  std::vector<Vertex> order(visit.rbegin(), visit.rend());
  VertexMask later = g.vertex_mask();
  for (Vertex v : order) {
    later &= ~bit(v);
    const VertexMask nb = g.neighbor_mask(v) & later;
    for (VertexMask rest = nb; rest != 0; rest &= rest - 1) {
      const Vertex u = std::countr_zero(rest);
      if ((nb & ~bit(u) & ~g.neighbor_mask(u)) != 0) return {false, std::nullopt};
    }
  }
  return {true, std::move(order)};
}

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (VertexMask rest = g.neighbor_mask(u) & ~low_mask(u + 1); rest != 0; rest &= rest - 1) {
      if ((g.neighbor_mask(u) & g.neighbor_mask(std::countr_zero(rest))) != 0) return false;
    }
  }
  return true;
}

int max_triangles_per_edge(const Graph& g) {
  int best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (VertexMask rest = g.neighbor_mask(u) & ~low_mask(u + 1); rest != 0; rest &= rest - 1) {
      best = std::max(best, std::popcount(g.neighbor_mask(u) & g.neighbor_mask(std::countr_zero(rest))));
    }
  }
  return best;
}

bool is_kr_free(const Graph& g, int r) { return clique_number(g) < r; }

// ---- enumeration --------------------------------------------------------

LabeledGraphStream::LabeledGraphStream(int n, GraphFilter filter) : n_(n), filter_(std::move(filter)) {
  if (n < 0 || n > kMaxEnumerationVertices) {
    throw Error(ErrorCode::kUnsupportedSize,
                "builtin enumeration supports n <= " + std::to_string(kMaxEnumerationVertices) +
                    "; feed larger families as a graph6 stream instead");
  }
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }
  total_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> LabeledGraphStream::next() {
  const std::size_t e = pairs_.size();
  while (cursor_ < total_) {
    const std::uint64_t code = cursor_++;
    std::vector<VertexMask> masks(static_cast<std::size_t>(n_), 0);
    for (std::size_t k = 0; k < e; ++k) {
      if ((code >> (e - 1 - k)) & 1) {
        masks[static_cast<std::size_t>(pairs_[k].u)] |= bit(pairs_[k].v);
        masks[static_cast<std::size_t>(pairs_[k].v)] |= bit(pairs_[k].u);
      }
    }
    Graph g = Graph::from_masks(std::move(masks));
    if (!filter_ || filter_(g)) return g;
  }
  return std::nullopt;
}

LabeledTreeStream::LabeledTreeStream(int n) : n_(n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "labeled trees need n >= 2");
  if (n > kMaxVertices) throw Error(ErrorCode::kUnsupportedSize, "too many vertices");
  code_.assign(static_cast<std::size_t>(n - 2), 0);
  total_ = 1;
  for (int i = 0; i < n - 2; ++i) {
    if (total_ > UINT64_MAX / static_cast<std::uint64_t>(n)) {
      throw Error(ErrorCode::kUnsupportedSize, "tree count overflows");
    }
    total_ *= static_cast<std::uint64_t>(n);
  }
}

std::optional<Graph> LabeledTreeStream::next() {
  if (cursor_ >= total_) return std::nullopt;
  // Decode the current Prüfer sequence.
  std::vector<int> degree(static_cast<std::size_t>(n_), 1);
  for (Vertex v : code_) ++degree[static_cast<std::size_t>(v)];
  std::vector<VertexMask> masks(static_cast<std::size_t>(n_), 0);
  auto link = [&](Vertex a, Vertex b) {
    masks[static_cast<std::size_t>(a)] |= bit(b);
    masks[static_cast<std::size_t>(b)] |= bit(a);
  };
  for (Vertex v : code_) {
    Vertex leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    link(leaf, v);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(v)];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n_; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        link(a, v);
        break;
      }
    }
  }
  // Advance to the next sequence in lexicographic order.
  ++cursor_;
  for (auto it = code_.rbegin(); it != code_.rend(); ++it) {
    if (++*it < n_) break;
    *it = 0;
  }
  return Graph::from_masks(std::move(masks));
}

std::vector<Graph> enumerate_labeled_graphs(int n, const GraphFilter& filter) {
  LabeledGraphStream stream(n, filter);
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> enumerate_labeled_trees(int n) {
  LabeledTreeStream stream(n);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(stream.total()));
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace cliquelab
