#include <doctest.h>

#include <random>

#include "c2lab/error.hpp"
#include "c2lab/families.hpp"
#include "c2lab/graph_poly.hpp"
#include "c2lab/matform.hpp"

using namespace c2lab;

TEST_CASE("p_matrix small cases") {
  const PolyMatrix b = p_matrix(family("banana", 2));
  CHECK(b.dim() == 1);
  CHECK(b.at(1, 1) == MLPoly::parse("+1*a1 +1*a2"));

  // edges 1:(1,2) 2:(2,3) 3:(3,1), vertex 3 removed
  const PolyMatrix t = p_matrix(family("cycle", 3));
  CHECK(t.at(1, 1) == MLPoly::parse("+1*a1 +1*a3"));
  CHECK(t.at(2, 2) == MLPoly::parse("+1*a1 +1*a2"));
  CHECK(t.at(1, 2) == MLPoly::parse("-1*a1"));
  CHECK(t.symmetric());

  const PolyMatrix t2 = p_matrix(Graph(3, {{1, 3}, {2, 3}, {1, 2}}));
  CHECK(t2.at(1, 1) == MLPoly::parse("+1*a1 +1*a3"));
  CHECK(t2.at(2, 2) == MLPoly::parse("+1*a2 +1*a3"));
  CHECK(t2.at(2, 1) == MLPoly::parse("-1*a3"));

  CHECK_THROWS_AS(p_matrix(Graph(3, {{1, 2}})), Error);
}

TEST_CASE("det P_G = phi for every removed vertex") {
  int graphs = 0;
  for (const auto& [name, g] : builtin_corpus()) {
    if (g.edge_count() > 8 || !is_connected(g)) continue;
    INFO(name);
    ++graphs;
    const Poly want(phi(g));
    for (int v = 1; v <= g.vertex_count(); ++v) CHECK(p_matrix(g, v).determinant() == want);
  }
  CHECK(graphs >= 20);
}

TEST_CASE("worked tree example") {
  Graph host;
  for (const auto& [name, g] : builtin_corpus())
    if (name == "tree-example") host = g;
  REQUIRE(host.edge_count() == 8);
  const EdgeSet tree{1, 2, 3, 4, 5, 6};
  const Diagonalization d = diagonalize_wrt_tree(host, tree);
  CHECK(d.root == 7);
  CHECK(d.edge_of_row == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(d.ops == std::vector<RowColOp>{{4, 2}, {3, 2}, {6, 5}, {5, 1}, {2, 1}});
  // before the operations, modulo the non-tree variables
  const PolyMatrix m = d.start.zero_vars({7, 8});
  CHECK(m.at(1, 1) == MLPoly::parse("+1*a1 +1*a2 +1*a5"));
  CHECK(m.at(2, 2) == MLPoly::parse("+1*a2 +1*a3 +1*a4"));
  CHECK(m.at(1, 5) == MLPoly::parse("-1*a5"));
  CHECK(m.at(5, 6) == MLPoly::parse("-1*a6"));
  CHECK(m.at(3, 4).is_zero());
  CHECK(diagonal_contract_modulo(d, host));
  CHECK(diagonal_contract(d));
  CHECK(d.matrix.determinant() == Poly(phi(host)));
}

TEST_CASE("diagonalization on K4 and small graphs") {
  const Graph k4 = family("complete", 4);
  int trees = 0;
  for (EdgeSet t : spanning_trees(k4)) {
    const Diagonalization d = diagonalize_wrt_tree(k4, t);
    CHECK(diagonal_contract(d));
    CHECK(diagonal_contract_modulo(d, k4));
    CHECK(d.matrix.symmetric());
    PolyMatrix replay = d.start;
    for (const RowColOp& op : d.ops) replay.apply(op);
    CHECK(replay == d.matrix);
    CHECK(d.matrix.determinant() == Poly(phi(k4)));
    ++trees;
  }
  CHECK(trees == 16);
  for (const Graph& g : connected_multigraphs(5, true)) {
    const Poly want(phi(g));
    for (EdgeSet t : spanning_trees(g)) {
      const Diagonalization d = diagonalize_wrt_tree(g, t);
      CHECK(diagonal_contract(d));
      CHECK(d.matrix.determinant() == want);
    }
  }
  CHECK_THROWS_AS(diagonalize_wrt_tree(k4, {1, 2}), Error);
}

TEST_CASE("rank evaluation") {
  const FqField f3 = make_field(3);
  CHECK(eval_rank(p_matrix(family("banana", 2)), {0, 1, 2}, f3) == 0);
  const FqField f2 = make_field(2);
  CHECK(eval_rank(p_matrix(family("cycle", 3)), {0, 1, 1, 1}, f2) == 2);

  // rank is unchanged by the row/column operations
  const Graph w = family("wheel", 4);
  const Diagonalization d = diagonalize_wrt_tree(w, spanning_trees(w).front());
  std::mt19937 rng(7);
  const FqField f5 = make_field(5);
  for (int trial = 0; trial < 200; ++trial) {
    FqPoint x(w.edge_count() + 1, 0);
    for (int e = 1; e <= w.edge_count(); ++e) x[e] = static_cast<FqField::Elem>(rng() % 5);
    CHECK(eval_rank(d.start, x, f5) == eval_rank(d.matrix, x, f5));
    CHECK(eval_rank(p_matrix(w), x, f5) == eval_rank(d.matrix, x, f5));
  }
}
