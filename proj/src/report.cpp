#include "c2lab/report.hpp"

#include "c2lab/admissible.hpp"
#include "c2lab/c2.hpp"

namespace c2lab {

using nlohmann::json;

json report_envelope(const std::string& command) { return {{"schema", kReportSchema}, {"command", command}}; }

json error_json(const Error& e) { return {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return 3;
    case ErrorCode::DivisibilityViolated: return 1;
    default: return 2;
  }
}

namespace {

template <typename F>
json defined_or_reason(F compute) {
  try {
    json j = compute();
    j["defined"] = true;
    return j;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) throw;
    return {{"defined", false}, {"reason", std::string(to_string(e.code()))}, {"message", e.what()}};
  }
}

}  // namespace

json c2_verdict(const Graph& g, const std::string& graph_id, const FqField& f, const C2Request& req,
                const CountOptions& opt) {
  json v = {{"graph", graph_id}, {"q", f.q()}};
  if (req.param) v["c2_param"] = defined_or_reason([&] { return c2_param(g, f, opt).to_json(); });
  if (req.dual) v["c2_dual"] = defined_or_reason([&] { return c2_dual(g, f, opt).to_json(); });
  if (req.pos) v["c2_pos"] = defined_or_reason([&] { return c2_pos(g, f, opt).to_json(); });
  if (req.structural)
    v["admissible_structural"] = defined_or_reason([&] { return admissible_structural(g, opt).to_json(); });
  if (req.at_q) v["admissible_at_q"] = defined_or_reason([&] { return admissible_at_q(g, f, opt).to_json(); });
  // agreement among the spaces that are defined
  std::vector<int> values;
  for (const char* k : {"c2_param", "c2_dual", "c2_pos"})
    if (v.contains(k) && v[k]["defined"] == true) values.push_back(v[k]["value"].get<int>());
  bool agree = true;
  for (int x : values) agree &= x == values.front();
  v["spaces_agree"] = agree;
  return v;
}

json diagonalization_to_json(const Diagonalization& d) {
  json ops = json::array();
  for (const RowColOp& op : d.ops) ops.push_back({op.source, op.target});
  return {{"root", d.root},
          {"vertex_of_row", d.vertex_of_row},
          {"edge_of_row", d.edge_of_row},
          {"ops", ops},
          {"start", d.start.to_json()},
          {"matrix", d.matrix.to_json()},
          {"contract", diagonal_contract(d)}};
}

std::string render_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace c2lab
