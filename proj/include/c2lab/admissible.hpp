#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "c2lab/count.hpp"
#include "c2lab/graph.hpp"

namespace c2lab {

enum class SubquotientCondition { Planar, Disconnected, ShortLoop, ContractsCycle, Uncovered };
std::string condition_name(SubquotientCondition c);

struct SubquotientCheck {
  EdgeSet deleted, contracted;
  SubquotientCondition condition = SubquotientCondition::Uncovered;
};

struct StructuralVerdict {
  bool admissible = false;
  bool planar_shortcut = false;
  std::vector<SubquotientCheck> certificate;  // in scan order
  std::optional<SubquotientCheck> uncovered;  // first failing subquotient
  /// Entries beyond `max_entries` are summarized by their tallies only.
  nlohmann::json to_json(std::size_t max_entries = 1000) const;
};

/// Every subquotient G\I//J with |I| < |J| is disconnected, planar or has a
/// loop of length at most 3 (contracting a cycle gives a zero polynomial and
/// is recorded as such). Planar G returns at once. Scans in increasing
/// |I|+|J|. Needs G log-divergent with h_G, n_G >= 3.
StructuralVerdict admissible_structural(const Graph& g, const CountOptions& opt = {});

/// Re-checks one certificate entry from scratch.
SubquotientCondition classify_subquotient(const Graph& g, EdgeSet deleted, EdgeSet contracted);

struct AtQVerdict {
  int q = 0;
  bool admissible = true;
  long pairs_checked = 0;
  std::optional<std::pair<EdgeSet, EdgeSet>> witness;  // (I deleted, J contracted)
  BigInt witness_count;
  nlohmann::json to_json() const;
};

/// [phi^J_I] = 0 mod q^3 for all I, J with |J| > |I|, |I| <= n_G - 3, where
/// phi^J_I = phi of G\I//J counted in its N - |I| - |J| variables. Pairs are
/// scanned in increasing |I|+|J|; the first violation is returned.
AtQVerdict admissible_at_q(const Graph& g, const FqField& f, const CountOptions& opt = {});

}  // namespace c2lab
