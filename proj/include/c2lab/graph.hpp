#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "c2lab/edge_set.hpp"

namespace c2lab {

struct Edge {
  int u = 0;
  int v = 0;
  int label = 0;

  bool is_self_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

/// Labeled multigraph. Vertices are 1..vertex_count(); self-loops and
/// parallel edges are allowed. Edge labels are kept through deletion and
/// contraction, so a subquotient of G still names its edges by G's labels.
class Graph {
 public:
  Graph() = default;
  /// Edges get labels 1..N in the given order.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& endpoints);
  /// Explicit labels; they must be distinct, within 1..64, and ascending.
  static Graph with_labels(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// n_G = |V| - 1
  int n() const { return vertex_count_ - 1; }
  /// h_G = N_G - n_G (the loop number when G is connected)
  int loop_number() const { return edge_count() - n(); }
  /// N - |V| + #components, the first Betti number.
  int cycle_rank() const;

  EdgeSet edges() const { return edge_mask_; }
  const std::vector<Edge>& edge_list() const { return edges_; }
  bool has_edge(int label) const { return edge_mask_.contains(label); }
  const Edge& edge(int label) const;
  EdgeSet self_loops() const;
  /// Edges incident to v, self-loops included.
  EdgeSet incident(int v) const;
  std::vector<int> degrees() const;  // index 0 unused; a self-loop counts twice

  bool is_log_divergent() const { return edge_count() == 2 * loop_number(); }

  bool operator==(const Graph&) const = default;

 private:
  void validate() const;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  EdgeSet edge_mask_;
};

Graph delete_edges(const Graph& g, EdgeSet deleted);

/// Contracts the edges of J in increasing label order; the surviving endpoint
/// of each contracted edge is the smaller vertex and higher vertices shift
/// down. Throws SelfLoopContraction when an edge of J is a self-loop at its
/// turn, which happens exactly when J contains a cycle of g.
Graph contract_edges(const Graph& g, EdgeSet contracted);

/// G \ deleted // contracted
Graph subquotient(const Graph& g, EdgeSet deleted, EdgeSet contracted);

int component_count(const Graph& g);
bool is_connected(const Graph& g);
/// True when the edges of s contain no cycle (self-loops are cycles).
bool is_forest(const Graph& g, EdgeSet s);
bool is_spanning_tree(const Graph& g, EdgeSet t);

/// All spanning trees in increasing bitmask order. Throws NotConnected.
std::vector<EdgeSet> spanning_trees(const Graph& g);
std::uint64_t spanning_tree_count(const Graph& g);

/// True iff g has a cycle of length <= k (self-loop = 1, double edge = 2).
bool girth_at_most(const Graph& g, int k);
/// Edge sets of all 3-cycles on three distinct vertices.
std::vector<EdgeSet> triangles(const Graph& g);
/// Edge sets forming a single simple cycle (self-loops and 2-cycles included).
std::vector<EdgeSet> cycles(const Graph& g);

/// Brute force over vertex permutations; intended for <= 8 vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace c2lab
