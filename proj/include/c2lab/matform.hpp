#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "c2lab/fq_eval.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/mlpoly.hpp"

namespace c2lab {

/// Add row `source` to row `target`, then column `source` to column `target`
/// (1-based).
struct RowColOp {
  int source = 0;
  int target = 0;
  bool operator==(const RowColOp&) const = default;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int dim, EdgeSet ambient = {});

  int dim() const { return dim_; }
  // 1-based
  MLPoly& at(int r, int c) { return a_[(r - 1) * dim_ + (c - 1)]; }
  const MLPoly& at(int r, int c) const { return a_[(r - 1) * dim_ + (c - 1)]; }

  bool symmetric() const;
  void apply(const RowColOp& op);
  /// New row/column k is old row/column order[k-1].
  PolyMatrix permuted(const std::vector<int>& order) const;
  PolyMatrix zero_vars(EdgeSet k) const;
  /// Memoized cofactor expansion; the entries multiply out of the
  /// multilinear world, hence Poly.
  Poly determinant() const;
  /// Positions (1-based) of entries that involve alpha_e.
  std::vector<std::pair<int, int>> occurrences(int e) const;

  bool operator==(const PolyMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }
  nlohmann::json to_json() const;
  std::string to_string() const;

 private:
  int dim_ = 0;
  std::vector<MLPoly> a_;
};

/// P_G = E^T Delta E with the column of `removed` (default: highest vertex)
/// dropped; rows are the remaining vertices in increasing order. Throws
/// NotConnected.
PolyMatrix p_matrix(const Graph& g, int removed = 0);

struct Diagonalization {
  PolyMatrix matrix;               // P~ in the numbered basis
  std::vector<RowColOp> ops;       // applied to `start` in order
  PolyMatrix start;                // P_G with rows permuted to the numbering
  std::vector<int> vertex_of_row;  // row k -> vertex
  std::vector<int> edge_of_row;    // row k -> tree edge above that vertex
  int root = 0;
};

/// Numbers the tree from the removed (highest) vertex downwards in DFS
/// preorder, children by edge label; row k collects the subtree of its
/// vertex. Throws NotSpanningTree.
Diagonalization diagonalize_wrt_tree(const Graph& g, EdgeSet tree);

/// Each tree variable occurs in exactly one entry, the diagonal entry of its
/// row, with coefficient 1.
bool diagonal_contract(const Diagonalization& d);
/// With all non-tree variables set to zero the matrix is diag(alpha_e).
bool diagonal_contract_modulo(const Diagonalization& d, const Graph& g);

int eval_rank(const PolyMatrix& m, const FqPoint& point, const FqField& f);
/// Rank of a dense matrix over F_q (row-major, destroyed).
int fq_rank(std::vector<FqField::Elem>& a, int rows, int cols, const FqField& f);

}  // namespace c2lab
