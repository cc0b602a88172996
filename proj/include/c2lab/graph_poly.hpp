#pragma once

#include "c2lab/graph.hpp"
#include "c2lab/mlpoly.hpp"

namespace c2lab {

/// Sum over spanning trees of the product of the edges outside the tree.
/// Zero for a disconnected graph. Ambient: all edges of g.
MLPoly psi(const Graph& g);
/// Sum over spanning trees of the product of the tree edges.
MLPoly phi(const Graph& g);

/// Psi^I_J = Psi of G \ I // J (I deleted, J contracted). Zero when I and J
/// meet or J contains a cycle.
MLPoly psi_minor(const Graph& g, EdgeSet deleted, EdgeSet contracted);
/// phi^A_B = phi of G // A \ B (upper index contracted, lower deleted),
/// with the same zero conventions.
MLPoly phi_minor(const Graph& g, EdgeSet contracted, EdgeSet deleted);

}  // namespace c2lab
