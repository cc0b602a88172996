#include "c2lab/graph_poly.hpp"

namespace c2lab {

MLPoly psi(const Graph& g) {
  MLPoly p(g.edges());
  if (!is_connected(g)) return p;
  for (EdgeSet t : spanning_trees(g)) p.add_term(g.edges() - t, 1);
  return p;
}

MLPoly phi(const Graph& g) {
  MLPoly p(g.edges());
  if (!is_connected(g)) return p;
  for (EdgeSet t : spanning_trees(g)) p.add_term(t, 1);
  return p;
}

MLPoly psi_minor(const Graph& g, EdgeSet deleted, EdgeSet contracted) {
  const EdgeSet ambient = g.edges() - deleted - contracted;
  if (!deleted.disjoint(contracted) || !is_forest(g, contracted)) return MLPoly(ambient);
  return psi(subquotient(g, deleted, contracted));
}

MLPoly phi_minor(const Graph& g, EdgeSet contracted, EdgeSet deleted) {
  const EdgeSet ambient = g.edges() - deleted - contracted;
  if (!deleted.disjoint(contracted) || !is_forest(g, contracted)) return MLPoly(ambient);
  return phi(subquotient(g, deleted, contracted));
}

}  // namespace c2lab
