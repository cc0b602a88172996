#pragma once

#include <utility>

#include <nlohmann/json.hpp>

#include "c2lab/count.hpp"
#include "c2lab/graph.hpp"

namespace c2lab {

enum class CountMethod { Brute, Reduced };

/// A count divided by q^2: `quotient` is the full quotient, `value` its
/// residue mod q.
struct C2Value {
  int q = 0;
  BigInt raw;
  BigInt quotient;
  int value = 0;
  nlohmann::json to_json() const;
};

/// ([Psi_G] / q^2) mod q. Needs n_G >= 2; throws DivisibilityViolated when
/// q^2 does not divide the count.
C2Value c2_param(const Graph& g, const FqField& f, const CountOptions& opt = {},
                 CountMethod method = CountMethod::Brute);
/// ([phi_G] / q^2) mod q. Needs h_G >= 2.
C2Value c2_dual(const Graph& g, const FqField& f, const CountOptions& opt = {},
                CountMethod method = CountMethod::Brute);
/// Quadric union in position space divided by q^2. Needs N <= 2n, n >= 2.
C2Value c2_pos(const Graph& g, const FqField& f, const CountOptions& opt = {});

/// The two polynomials phi^{1,2}_{G,3} and phi^{13,23}_G for a triangle whose
/// edges, in label order, play the roles 1, 2, 3. Throws NotATriangle.
std::pair<MLPoly, MLPoly> triangle_pair(const Graph& g, EdgeSet triangle);

struct TriangleCount {
  int q = 0;
  BigInt raw;  // common zeros in the N - 3 remaining variables
  int value = 0;
};
/// Needs h_G >= 3.
TriangleCount c2_dual_triangle(const Graph& g, EdgeSet triangle, const FqField& f, const CountOptions& opt = {});

/// Sums of torus counts [Psi^I_J]' and [phi^I_J]' over disjoint I, J with
/// |I| = |J| = t, 1 <= t <= n_G.
std::pair<BigInt, BigInt> s_t_sums(const Graph& g, int t, const FqField& f, const CountOptions& opt = {});

}  // namespace c2lab
