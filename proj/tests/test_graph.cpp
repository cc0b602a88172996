#include <doctest.h>

#include "c2lab/census.hpp"
#include "c2lab/error.hpp"
#include "c2lab/families.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/graph_io.hpp"
#include "c2lab/graph_poly.hpp"
#include "c2lab/planarity.hpp"

using namespace c2lab;

namespace {

Graph triangle() { return family("cycle", 3); }
Graph k4() { return family("complete", 4); }

}  // namespace

TEST_CASE("edge sets") {
  EdgeSet s{1, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "{1,3,5}");
  CHECK((s - EdgeSet{3}) == EdgeSet{1, 5});
  CHECK(s.min() == 1);
  CHECK(s.max() == 5);
  std::vector<EdgeSet> seen;
  for_each_subset_of_size(EdgeSet{2, 4, 6, 8}, 2, [&](EdgeSet x) { seen.push_back(x); });
  REQUIRE(seen.size() == 6);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  int all = 0;
  for_each_subset(EdgeSet{1, 2, 3}, [&](EdgeSet) { ++all; });
  CHECK(all == 8);
  CHECK_THROWS_AS(EdgeSet{65}, Error);
}

TEST_CASE("delete and contract") {
  Graph c3 = triangle();
  Graph path = delete_edges(c3, {1});
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(is_connected(path));
  CHECK(delete_edges(c3, {}) == c3);

  Graph k4m = delete_edges(k4(), {1, 2});
  CHECK(k4m.vertex_count() == 4);
  CHECK(k4m.edge_count() == 4);
  CHECK(k4m.loop_number() == 1);

  Graph dbl = contract_edges(c3, {1});
  CHECK(dbl.vertex_count() == 2);
  CHECK(dbl.edge_count() == 2);
  CHECK(dbl.edges() == EdgeSet{2, 3});
  CHECK(dbl.self_loops().empty());

  Graph dot = contract_edges(c3, {1, 2});
  CHECK(dot.vertex_count() == 1);
  CHECK(dot.self_loops() == EdgeSet{3});

  try {
    contract_edges(family("banana", 3), {1, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelfLoopContraction);
  }
}

TEST_CASE("contraction fails exactly on edge sets containing a cycle") {
  for (const Graph& g : {k4(), family("wheel", 4), family("Gn", 3)}) {
    for_each_subset(g.edges(), [&](EdgeSet j) {
      bool threw = false;
      try {
        contract_edges(g, j);
      } catch (const Error& e) {
        threw = e.code() == ErrorCode::SelfLoopContraction;
      }
      CHECK(threw == !is_forest(g, j));
    });
  }
}

TEST_CASE("delete and contract commute, loop numbers drop as expected") {
  const Graph g = family("wheel", 4);
  for_each_subset_of_size(g.edges(), 2, [&](EdgeSet i) {
    for_each_subset_of_size(g.edges() - i, 2, [&](EdgeSet j) {
      if (!is_forest(g, j)) return;
      Graph a = contract_edges(delete_edges(g, i), j);
      Graph b = delete_edges(contract_edges(g, j), i);
      CHECK(a == b);
      if (is_connected(a)) {
        CHECK(a.loop_number() == g.loop_number() - i.size());
        CHECK(a.n() == g.n() - j.size());
      }
    });
  });
}

TEST_CASE("connectivity") {
  CHECK(is_connected(triangle()));
  CHECK_FALSE(is_connected(Graph(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(is_connected(Graph(4, {{1, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("spanning trees") {
  auto t = spanning_trees(triangle());
  REQUIRE(t.size() == 3);
  CHECK(t[0] == EdgeSet{1, 2});
  CHECK(t[1] == EdgeSet{1, 3});
  CHECK(t[2] == EdgeSet{2, 3});
  auto b = spanning_trees(family("banana", 3));
  REQUIRE(b.size() == 3);
  CHECK(b[0] == EdgeSet{1});
  // matrix-tree theorem: det of the reduced Laplacian of K_4 is 16
  CHECK(spanning_tree_count(k4()) == 16);
  CHECK(spanning_tree_count(family("wheel", 4)) == 45);
  CHECK_THROWS_AS(spanning_trees(Graph(2, std::vector<std::pair<int, int>>{})), Error);
}

TEST_CASE("girth") {
  CHECK(girth_at_most(family("banana", 3), 2));
  CHECK_FALSE(girth_at_most(family("cycle", 5), 3));
  CHECK(girth_at_most(family("cycle", 5), 5));
  CHECK(girth_at_most(k4(), 3));
  CHECK(girth_at_most(Graph(1, {{1, 1}}), 1));
  CHECK(triangles(k4()).size() == 4);
  CHECK(triangles(family("banana", 3)).empty());
  CHECK(cycles(k4()).size() == 7);
  CHECK(cycles(family("banana", 3)).size() == 3);
}

TEST_CASE("planarity and duals") {
  CHECK(is_planar(k4()));
  CHECK_FALSE(is_planar(family("complete", 5)));
  CHECK_FALSE(is_planar(family("complete", 6)));
  Graph d = planar_dual(k4());
  CHECK(d.edge_count() == 6);
  CHECK(d.n() == 3);
  CHECK(d.loop_number() == 3);
  CHECK(psi(d) == phi(k4()));

  Graph tri_dual = planar_dual(triangle());
  CHECK(is_isomorphic(tri_dual, family("banana", 3)));
  CHECK(psi(tri_dual) == phi(triangle()));

  for (const auto& [name, g] : builtin_corpus()) {
    if (!is_connected(g) || !is_planar(g)) continue;
    INFO(name);
    Graph dual = planar_dual(g);
    CHECK(dual.n() == g.loop_number());
    CHECK(dual.loop_number() == g.n());
    CHECK(psi(dual) == phi(g));
    CHECK(phi(dual) == psi(g));
  }
}

TEST_CASE("double dual of 2-connected planar graphs") {
  for (const Graph& g : {k4(), family("wheel", 5), family("cycle", 4), family("banana", 4),
                         Graph(4, {{1, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}})}) {
    INFO(format_graph_text(g));
    CHECK(is_isomorphic(planar_dual(planar_dual(g)), g));
  }
}

TEST_CASE("families") {
  Graph g3 = family("Gn", 3);
  CHECK(g3.edge_count() == 6);
  CHECK(g3.vertex_count() == 4);
  CHECK(g3.loop_number() == 3);
  CHECK(is_isomorphic(family("wheel", 3), k4()));
  CHECK(family("banana", 3).vertex_count() == 2);
  CHECK_THROWS_AS(family("petersen", 3), Error);
  CHECK_THROWS_AS(family("wheel", 2), Error);
  CHECK(family_from_spec("wheel:4") == family("wheel", 4));
  for (int n = 2; n <= 6; ++n) {
    Graph g = family("Gn", n);
    CHECK(g.edge_count() == 2 * n);
    CHECK(g.is_log_divergent());
  }
}

TEST_CASE("census") {
  // exhaustive ordered-pair enumeration by an independent script
  const int r12[] = {3, 36, 216, 960};
  const int r21[] = {4, 38, 220, 968};
  for (int n = 2; n <= 5; ++n) {
    Graph g = family("Gn", n);
    CHECK(census(g, 1, 2).r == static_cast<std::uint64_t>(r12[n - 2]));
    CHECK(census(g, 2, 1).r == static_cast<std::uint64_t>(r21[n - 2]));
  }
  CHECK(census(family("Gn", 3), 1, 2).r_bar == 60);
  CHECK(census(family("Gn", 4), 1, 2).r_bar == 560);
  CHECK(multinomial(6, 2, 1) == 60);
  CHECK_THROWS_AS(census(k4(), 4, 0), Error);
  CHECK_THROWS_AS(census(k4(), -1, 0), Error);
  for (const Graph& g : {k4(), family("wheel", 4), family("Gn", 3)}) {
    const std::uint64_t trees = spanning_tree_count(g);
    for (int u = 0; u <= g.loop_number(); ++u) {
      CHECK(census(g, u, 0).r == census(g, 0, u).r);
      CHECK(BigInt(census(g, u, 0).r) == multinomial(g.loop_number(), u, 0) * trees);
    }
    for (int u = 0; u <= 2; ++u)
      for (int v = 0; v <= 2; ++v) CHECK(census(g, u, v).r_bar == census(g, v, u).r_bar);
  }
}

TEST_CASE("graph text and json round trip") {
  Graph g = family("Gn", 3);
  CHECK(parse_graph_text(format_graph_text(g)) == g);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  Graph sub = subquotient(k4(), {2}, {5});
  CHECK(graph_from_json(graph_to_json(sub)) == sub);
  CHECK(parse_graph_text("# triangle\np 3 3\n1 2\n2 3\n3 1\n") == triangle());
  CHECK_THROWS_AS(parse_graph_text("p 2 3\n1 2\n"), Error);
  CHECK_THROWS_AS(parse_graph_text("1 2\n"), Error);
  CHECK_THROWS_AS(parse_graph_text("p 1 2\n1 5\n"), Error);
}

TEST_CASE("small multigraph generator") {
  // counts by brute force over all vertex permutations in an independent script
  auto count_with = [](int m, bool loops) {
    auto all = connected_multigraphs(m, loops);
    return std::count_if(all.begin(), all.end(), [&](const Graph& g) { return g.edge_count() == m; });
  };
  CHECK(count_with(3, true) == 11);
  CHECK(count_with(4, true) == 30);
  CHECK(count_with(5, true) == 95);
  CHECK(count_with(5, false) == 33);
}
