// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include "cliquelab/graph.hpp"

namespace fixtures {

/// Wheel on a 5-ring (hub 0, ring 1..5) plus the chord 1-3.
inline cliquelab::Graph wheel_plus_chord() {
  return cliquelab::from_edge_list(
      6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}});
}

/// Two triangles sharing vertex 0.
inline cliquelab::Graph bowtie() { return cliquelab::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

/// Two triangles sharing the edge 0-1.
inline cliquelab::Graph diamond() { return cliquelab::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

}  // namespace fixtures
