#pragma once

#include "c2lab/graph.hpp"
#include "c2lab/mlpoly.hpp"

namespace c2lab {

/// Psi^{I,J}_{G,K}: determinant of M(G) = [[Delta(alpha), E], [-E^T, 0]] with
/// the edge rows I and edge columns J removed and alpha_t = 0 for t in K.
/// Rows and columns are ordered edges first (by label), then vertices
/// 1..n; the incidence column of the highest vertex is dropped and edges are
/// oriented from the lower to the higher endpoint. Throws BadIndices when
/// |I| != |J| or an index is not an edge.
MLPoly dodgson(const Graph& g, EdgeSet rows, EdgeSet cols, EdgeSet zeroed = {});

/// phi^{IS,JS}_{G,K} := iota(Psi^{IK,JK}_{G,S}) with Cremona ambient
/// E \ (I u J u K u S). I and J may coincide (phi^{I,I} = phi_I); otherwise
/// the four sets must be pairwise disjoint (IndexOverlap).
MLPoly dual_dodgson(const Graph& g, EdgeSet i, EdgeSet j, EdgeSet k, EdgeSet s);

/// The symbol phi^{A,B}_L: the common part of A and B is contracted, the
/// rest is the Dodgson pair, L is deleted. Zero when the sets overlap in any
/// other way or |A| != |B|.
MLPoly phi_sym(const Graph& g, EdgeSet a, EdgeSet b, EdgeSet lower = {});

}  // namespace c2lab
