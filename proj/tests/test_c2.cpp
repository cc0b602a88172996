#include <doctest.h>

#include "c2lab/c2.hpp"
#include "c2lab/error.hpp"
#include "c2lab/families.hpp"

using namespace c2lab;

TEST_CASE("c2 in three spaces: frozen raw counts") {
  const Graph k4 = family("complete", 4);
  const FqField f2 = make_field(2), f3 = make_field(3);
  CHECK(c2_param(k4, f2).raw == 36);
  CHECK(c2_dual(k4, f2).raw == 36);
  CHECK(c2_param(k4, f3).raw == 261);
  CHECK(c2_dual(k4, f3).raw == 261);
  CHECK(c2_pos(k4, f2).raw == 4084);
  CHECK(c2_param(family("wheel", 4), f2).raw == 156);
  CHECK(c2_dual(family("wheel", 4), f2).raw == 156);
  CHECK(c2_pos(k4, f2).quotient == 1021);
}

TEST_CASE("c2 agrees across spaces on small log-divergent graphs") {
  for (const Graph& g : {family("complete", 4), family("wheel", 4), family("Gn", 3)})
    for (int q : {2, 3}) {
      const FqField f = make_field(q);
      const int d = c2_dual(g, f).value;
      CHECK(c2_param(g, f).value == d);
      CHECK(c2_param(g, f, {}, CountMethod::Reduced).value == d);
      CHECK(c2_pos(g, f).value == d);
    }
  CHECK(c2_dual(family("complete", 4), make_field(2)).value == 1);
  CHECK(c2_dual(family("complete", 4), make_field(3)).value == 2);
}

TEST_CASE("c2 guards and degenerate cases") {
  const FqField f2 = make_field(2);
  CHECK_THROWS_AS(c2_param(family("banana", 3), f2), Error);
  for (int q : {2, 3, 5}) CHECK(c2_dual(family("banana", 3), make_field(q)).value == 1);
  // a 2-cycle kills the dual invariant
  const Graph doubled(4, {{1, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {2, 4}});
  for (int q : {2, 3}) CHECK(c2_dual(doubled, make_field(q)).value == 0);
  // N < 2n with n >= 3 gives a vanishing position-space invariant
  for (const Graph& g : {family("cycle", 4), Graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}}), delete_edges(family("Gn", 3), EdgeSet{1})})
    CHECK(c2_pos(g, make_field(2)).value == 0);
  CHECK_THROWS_AS(c2_pos(family("banana", 3), f2), Error);
  try {
    c2_pos(family("banana", 3), f2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionUnmet);
  }
}

TEST_CASE("triangle formula for the dual invariant") {
  for (const Graph& g : {family("complete", 4), family("wheel", 4)})
    for (int q : {2, 3}) {
      const FqField f = make_field(q);
      for (EdgeSet t : triangles(g)) CHECK(c2_dual_triangle(g, t, f).value == c2_dual(g, f).value);
    }
  CHECK_THROWS_AS(c2_dual_triangle(family("complete", 4), EdgeSet{1, 2, 6}, make_field(2)), Error);
  // the pair has degrees n-1 and n-2, one short of the Chevalley-Warning bound
  const auto [a, b] = triangle_pair(family("wheel", 4), EdgeSet{1, 5, 6});
  CHECK(a.degree() == 3);
  CHECK(b.degree() == 2);
  CHECK_THROWS_AS(chevalley_warning_check({a, b}, make_field(2), 5), Error);
}

TEST_CASE("S_t sums agree under Cremona") {
  const Graph k4 = family("complete", 4);
  for (int t : {1, 3}) {
    const auto [sp, sf] = s_t_sums(k4, t, make_field(2));
    CHECK(sp == sf);
  }
  const auto [sp, sf] = s_t_sums(family("cycle", 3), 1, make_field(3));
  CHECK(sp == sf);
  CHECK_THROWS_AS(s_t_sums(k4, 4, make_field(2)), Error);
}
