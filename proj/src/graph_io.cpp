// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "cliquelab/error.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab {

namespace {

constexpr unsigned char kBias = 63;
constexpr unsigned char kMaxPrintable = 126;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6ParseError(Graph6Error::kMalformedSize, 0);
  const auto size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte == kMaxPrintable) throw Graph6ParseError(Graph6Error::kTooManyVertices, 0);
  if (size_byte < kBias || size_byte > kMaxPrintable) throw Graph6ParseError(Graph6Error::kMalformedSize, 0);
  const int n = size_byte - kBias;

  const std::size_t need = payload_bytes(n);
  for (std::size_t i = 1; i < text.size() && i <= need; ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxPrintable) throw Graph6ParseError(Graph6Error::kInvalidCharacter, i);
  }
  if (text.size() < need + 1) throw Graph6ParseError(Graph6Error::kTruncated, text.size());
  if (text.size() > need + 1) throw Graph6ParseError(Graph6Error::kTrailingGarbage, need + 1);

  std::vector<VertexMask> masks(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((group >> (5 - k % 6)) & 1) {
        masks[static_cast<std::size_t>(i)] |= VertexMask{1} << j;
        masks[static_cast<std::size_t>(j)] |= VertexMask{1} << i;
      }
    }
  }
  return Graph::from_masks(std::move(masks));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Vertices) {
    throw Error(ErrorCode::kUnsupportedSize,
                "graph6 output supports at most " + std::to_string(kMaxGraph6Vertices) + " vertices");
  }
  std::string out(1 + payload_bytes(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(kBias + n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    }
  }
  return out;
}

namespace {

bool read_int(std::string_view token, int& value) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    auto fail = [&] {
      return Error(ErrorCode::kParse, "edge list line " + std::to_string(line_no) + ": expected " +
                                          (n < 0 ? "vertex count" : "\"u v\""));
    };
    if (n < 0) {
      if (tok.size() != 1 || !read_int(tok[0], n) || n < 0) throw fail();
      continue;
    }
    int u = 0;
    int v = 0;
    if (tok.size() != 2 || !read_int(tok[0], u) || !read_int(tok[1], v)) throw fail();
    edges.emplace_back(u, v);
  }
  if (n < 0) throw Error(ErrorCode::kParse, "edge list: missing vertex count");
  return from_edge_list(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace cliquelab
