#pragma once

#include <vector>

#include "c2lab/graph.hpp"

namespace c2lab {

/// Rotation system of a multigraph: for every vertex, the darts around it in
/// cyclic order. Dart 2*k is edge k's end at edge_list()[k].u, dart 2*k+1
/// the end at .v (k is the position in edge_list(), not the label).
struct Embedding {
  std::vector<std::vector<int>> rotation;  // index 0 unused
  std::vector<std::vector<int>> faces;     // darts, in traversal order
};

bool is_planar(const Graph& g);

/// Throws NotPlanar. For disconnected graphs the faces are traced per
/// component, so Euler's formula holds component-wise.
Embedding planar_embedding(const Graph& g);

/// Dual graph: one vertex per face, dual edge with label l crossing edge l.
/// Throws NotConnected, NotPlanar.
Graph planar_dual(const Graph& g);

}  // namespace c2lab
