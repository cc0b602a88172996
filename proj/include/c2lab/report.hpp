#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "c2lab/count.hpp"
#include "c2lab/error.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/matform.hpp"

namespace c2lab {

inline constexpr const char* kReportSchema = "c2lab/1";

/// {"schema": ..., "command": ...}
nlohmann::json report_envelope(const std::string& command);

nlohmann::json error_json(const Error& e);

/// CLI exit status for a library error: 3 for BudgetExceeded, 1 for
/// DivisibilityViolated (a refutation datum), 2 otherwise.
int exit_code_for(ErrorCode code);

struct C2Request {
  bool param = true, dual = true, pos = true;
  bool structural = true;  // admissibility by subquotient scan
  bool at_q = false;       // admissibility by counting at this q
};

/// One verdict per (graph, q). Each space is either {"defined": true, ...}
/// or {"defined": false, "reason": code, "message": ...}. BudgetExceeded
/// is not caught.
nlohmann::json c2_verdict(const Graph& g, const std::string& graph_id, const FqField& f, const C2Request& req,
                          const CountOptions& opt = {});

nlohmann::json diagonalization_to_json(const Diagonalization& d);

/// Pretty-printed with a trailing newline; key order is sorted, so equal
/// values render to equal bytes.
std::string render_report(const nlohmann::json& j);

}  // namespace c2lab
