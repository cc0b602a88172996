#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "c2lab/graph.hpp"
#include "c2lab/mlpoly.hpp"

namespace c2lab {

enum class Identity {
  ContractionDeletion,  // phi = phi^k a_k + phi_k with phi^k = phi_{G//k}, phi_k = phi_{G\k}
  DodgsonCoefficient,   // phi^j_i phi^i_j -/+ phi^{ij} phi_{ij} = (phi^{i,j})^2
  DodgsonExpanded,      // phi^j phi^i -/+ phi^{ij} phi = phi^j_i phi^i_j -/+ phi^{ij} phi_{ij}
  DualDodgsonFirst,     // first type, indices I,J,K,S,a,b,x
  DualDodgsonSecond,    // second type, |J| = |I| + 1
  Corolla,              // phi_{G,1} = sum lambda_i a_i phi^{1,i}
  CycleSum,             // phi^1 = sum lambda_i phi^{1,i}
  Tadpole,              // phi_G = phi_{G\1} for a self-loop 1
  DoubleEdge,           // phi_G = phi_{G\1//2}(a1 + a2) + phi_{G\12}
  Radical,              // (phi^{i,k})^2 = [phi, phi^i]_k
  ResultantLemma,       // [phi^i, phi^j]_k against corrected right-hand sides
};

std::string identity_name(Identity id);
std::optional<Identity> identity_from_name(const std::string& name);
std::vector<Identity> all_identities();

struct IdentityIndices {
  EdgeSet i{}, j{}, k{}, s{};  // set-valued indices (I, J, K, S)
  int a = 0, b = 0, x = 0;
  int e1 = 0, e2 = 0, e3 = 0;  // single edge indices
  int vertex = 0;
  EdgeSet edges{};  // cycle edge set
};

struct IdentityResult {
  bool holds = true;
  int instances = 0;
  int failures = 0;
  /// Resolved signs / coefficients, e.g. {"sign=+1": 12, "sign=-1": 3}.
  std::map<std::string, int> witnesses;
  std::string first_failure;
};

/// Checks one instance. Throws BadIndices when the indices do not fit.
IdentityResult check_identity(Identity id, const Graph& g, const IdentityIndices& idx);
/// Checks every index choice of the built-in enumeration for this identity.
IdentityResult check_identity_all(Identity id, const Graph& g);

}  // namespace c2lab
