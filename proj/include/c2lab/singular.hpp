#pragma once

#include <optional>
#include <string>

#include "c2lab/count.hpp"
#include "c2lab/graph.hpp"

namespace c2lab {

enum class SingMethod {
  Jacobian,      // phi and all partials vanish
  JacobianTree,  // phi and the partials along a spanning tree vanish
  Rank,          // rank P_G(alpha) < n_G - 1
};

std::string sing_method_name(SingMethod m);
std::optional<SingMethod> sing_method_from_name(const std::string& name);

/// Spanning tree with the lexicographically smallest sorted label list.
EdgeSet lex_first_spanning_tree(const Graph& g);

/// Points of Sing(Z_G) over F_q in all N_G variables. The rank method needs a
/// connected graph (NotConnected).
CountReport sing_count(const Graph& g, const FqField& f, SingMethod m, const CountOptions& opt = {});

struct SingAgreement {
  BigInt points;         // q^N
  BigInt singular;       // points where all three predicates hold
  BigInt disagreements;  // points where they differ
};

/// Evaluates the three predicates at every point of F_q^N.
SingAgreement sing_pointwise(const Graph& g, const FqField& f, const CountOptions& opt = {});

}  // namespace c2lab
