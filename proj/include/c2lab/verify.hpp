#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "c2lab/count.hpp"
#include "c2lab/graph.hpp"

namespace c2lab {

enum class Theorem {
  ParamDual,            // c2 = dual c2 for duality admissible graphs
  DualPosition,         // dual c2 = position-space c2 (and 0 when N < 2n)
  SingDivisibility,     // q | [Sing(Z_G)] for h >= 2
  DualDivisibility,     // q^2 | [phi_G] for h >= 2
  QuadricCongruence,    // quadric union mod q^3 from phi, Sing and minors
  QuadricDivisibility,  // q^2 | quadric union for N <= 2n, n >= 2
  TreeCensus,           // r^{0,u} = C(n,u) T, r^{u,0} = C(h,u) T
  CensusSymmetry,       // r^{u,0} = r^{0,u} for log-divergent graphs
  GnCensus,             // closed forms for r^{1,2}, r^{2,1} of the G_n family
  Triangle,             // dual c2 from the triangle pair
  QuadricCorank,        // q^|I| [q_I] = q^{2n} sum_alpha q^{2 corank}
  CorankCongruence,     // corank sum mod q^4
  SingRank,             // singular locus = {rank P < n - 1}
};

std::string theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(const std::string& name);
std::vector<Theorem> all_theorems();
/// False for the purely combinatorial statements.
bool theorem_uses_q(Theorem t);

struct TheoremReport {
  Theorem theorem{};
  int q = 0;  // 0 when q plays no role
  bool pass = false;
  nlohmann::json details;
  nlohmann::json to_json() const;
};

/// Recomputes both sides of the statement from independent primitives.
/// Throws PreconditionUnmet when the hypotheses fail for (g, q).
TheoremReport verify(Theorem t, const Graph& g, const FqField* f, const CountOptions& opt = {});

/// Closed forms for the G_n census as printed.
BigInt gn_r12_closed_form(int n);
BigInt gn_r21_closed_form(int n);

}  // namespace c2lab
