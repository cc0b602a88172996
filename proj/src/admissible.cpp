#include "c2lab/admissible.hpp"

#include <cmath>
#include <map>

#include "c2lab/error.hpp"
#include "c2lab/graph_poly.hpp"
#include "c2lab/planarity.hpp"

namespace c2lab {

namespace {

void require_admissibility_setting(const Graph& g) {
  if (!is_connected(g) || !g.is_log_divergent() || g.loop_number() < 3 || g.n() < 3)
    throw Error(ErrorCode::PreconditionUnmet, "duality admissibility needs a connected log-divergent graph with h_G, n_G >= 3");
}

bool has_cycle(const Graph& g, EdgeSet s) { return !is_forest(g, s); }

// Visits (I, J) with |I| < |J|, disjoint, in increasing |I|+|J|; then |J|,
// then J and I in subset order. Stops when visit returns false.
template <typename Visit>
void scan_pairs(EdgeSet edges, int max_deleted, int max_contracted, Visit visit) {
  const int n_edges = edges.size();
  bool go = true;
  for (int total = 1; total <= n_edges && go; ++total)
    for (int j = (total + 2) / 2; j <= total && go; ++j) {
      const int i = total - j;
      if (i > max_deleted || j > max_contracted) continue;
      for_each_subset_of_size(edges, j, [&](EdgeSet J) {
        if (!go) return;
        for_each_subset_of_size(edges - J, i, [&](EdgeSet I) {
          if (go) go = visit(I, J);
        });
      });
    }
}

}  // namespace

std::string condition_name(SubquotientCondition c) {
  switch (c) {
    case SubquotientCondition::Planar: return "planar";
    case SubquotientCondition::Disconnected: return "disconnected";
    case SubquotientCondition::ShortLoop: return "short-loop";
    case SubquotientCondition::ContractsCycle: return "contracts-cycle";
    case SubquotientCondition::Uncovered: return "uncovered";
  }
  return "?";
}

SubquotientCondition classify_subquotient(const Graph& g, EdgeSet deleted, EdgeSet contracted) {
  if (has_cycle(g, contracted)) return SubquotientCondition::ContractsCycle;
  const Graph s = subquotient(g, deleted, contracted);
  if (!is_connected(s)) return SubquotientCondition::Disconnected;
  if (girth_at_most(s, 3)) return SubquotientCondition::ShortLoop;
  if (is_planar(s)) return SubquotientCondition::Planar;
  return SubquotientCondition::Uncovered;
}

StructuralVerdict admissible_structural(const Graph& g, const CountOptions& opt) {
  require_admissibility_setting(g);
  StructuralVerdict v;
  if (is_planar(g)) {
    v.admissible = true;
    v.planar_shortcut = true;
    v.certificate.push_back({{}, {}, SubquotientCondition::Planar});
    return v;
  }
  if (std::pow(3.0, g.edge_count()) > opt.budget)
    throw Error(ErrorCode::BudgetExceeded, "subquotient scan over 3^" + std::to_string(g.edge_count()) + " pairs exceeds the budget");
  v.admissible = true;
  scan_pairs(g.edges(), g.edge_count(), g.edge_count(), [&](EdgeSet I, EdgeSet J) {
    const SubquotientCheck c{I, J, classify_subquotient(g, I, J)};
    v.certificate.push_back(c);
    if (c.condition == SubquotientCondition::Uncovered) {
      v.admissible = false;
      v.uncovered = c;
      return false;
    }
    return true;
  });
  return v;
}

nlohmann::json StructuralVerdict::to_json(std::size_t max_entries) const {
  std::map<std::string, long> tally;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& c : certificate) {
    ++tally[condition_name(c.condition)];
    if (entries.size() < max_entries)
      entries.push_back({{"deleted", c.deleted.to_vector()},
                         {"contracted", c.contracted.to_vector()},
                         {"condition", condition_name(c.condition)}});
  }
  nlohmann::json j = {{"admissible", admissible},
                      {"planar_shortcut", planar_shortcut},
                      {"examined", certificate.size()},
                      {"tally", tally},
                      {"certificate", entries},
                      {"certificate_truncated", certificate.size() > entries.size()}};
  j["uncovered"] = uncovered ? nlohmann::json{{"deleted", uncovered->deleted.to_vector()},
                                              {"contracted", uncovered->contracted.to_vector()}}
                             : nlohmann::json(nullptr);
  return j;
}

AtQVerdict admissible_at_q(const Graph& g, const FqField& f, const CountOptions& opt) {
  require_admissibility_setting(g);
  AtQVerdict v;
  v.q = f.q();
  const BigInt q3 = BigInt(f.q()) * f.q() * f.q();
  // |J| > n_G contracts a cycle, so phi^J_I = 0 there
  scan_pairs(g.edges(), g.n() - 3, g.n(), [&](EdgeSet I, EdgeSet J) {
    ++v.pairs_checked;
    const MLPoly p = phi_minor(g, J, I);
    const int vars = g.edge_count() - I.size() - J.size();
    const BigInt c = count_zeros({p}, f, vars, opt).raw;
    if (c % q3 != 0) {
      v.admissible = false;
      v.witness = {I, J};
      v.witness_count = c;
      return false;
    }
    return true;
  });
  return v;
}

nlohmann::json AtQVerdict::to_json() const {
  nlohmann::json j = {{"q", q}, {"admissible", admissible}, {"pairs_checked", pairs_checked}};
  j["witness"] = witness ? nlohmann::json{{"deleted", witness->first.to_vector()},
                                          {"contracted", witness->second.to_vector()},
                                          {"count", witness_count.str()}}
                         : nlohmann::json(nullptr);
  return j;
}

}  // namespace c2lab
