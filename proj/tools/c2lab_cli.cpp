// Command-line front end: every command prints one JSON report.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "c2lab/c2.hpp"
#include "c2lab/census.hpp"
#include "c2lab/count.hpp"
#include "c2lab/error.hpp"
#include "c2lab/families.hpp"
#include "c2lab/graph_io.hpp"
#include "c2lab/graph_poly.hpp"
#include "c2lab/matform.hpp"
#include "c2lab/planarity.hpp"
#include "c2lab/report.hpp"
#include "c2lab/singular.hpp"
#include "c2lab/verify.hpp"
#include "c2lab/admissible.hpp"

using namespace c2lab;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string family_spec;
  std::string graph_file;
  std::vector<int> q_list;
  double budget = 1e8;
  int threads = 1;
  std::string out;
  bool verbose = false;

  CountOptions options() const { return {budget, threads}; }
};

void log(const RunConfig& cfg, const std::string& msg) {
  if (cfg.verbose) std::cerr << "c2lab: " << msg << "\n";
}

struct Source {
  Graph graph;
  std::string id;
};

Source load_source(const RunConfig& cfg) {
  const bool fam = !cfg.family_spec.empty(), file = !cfg.graph_file.empty();
  if (fam == file) throw Error(ErrorCode::BadParameter, "give exactly one of --family and --graph-file");
  if (fam) return {family_from_spec(cfg.family_spec), "family:" + cfg.family_spec};
  return {load_graph_file(cfg.graph_file), "file:" + cfg.graph_file};
}

std::vector<int> q_list(const RunConfig& cfg, std::vector<int> fallback) {
  if (cfg.q_list.empty()) return fallback;
  return cfg.q_list;
}

json graph_summary(const Graph& g) {
  return {{"edges", g.edge_count()},
          {"vertices", g.vertex_count()},
          {"loops", g.loop_number()},
          {"connected", is_connected(g)},
          {"log_divergent", g.is_log_divergent()},
          {"planar", is_planar(g)},
          {"graph", graph_to_json(g)}};
}

json header(const std::string& command, const RunConfig& cfg, const Source* src) {
  json j = report_envelope(command);
  j["budget"] = cfg.budget;
  if (src) j["graph"] = src->id;
  return j;
}

MLPoly pick_poly(const Graph& g, const std::string& which) {
  if (which == "psi") return psi(g);
  if (which == "phi") return phi(g);
  throw Error(ErrorCode::BadParameter, "unknown polynomial '" + which + "'");
}

EdgeSet parse_edge_list(const std::string& text) {
  EdgeSet s;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      s |= EdgeSet{std::stoi(tok)};
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad edge label '" + tok + "'");
    }
  }
  return s;
}

struct Outcome {
  json report;
  int code = 0;
};

Outcome cmd_poly(const RunConfig& cfg, const std::string& which) {
  const Source src = load_source(cfg);
  json j = header("poly", cfg, &src);
  j["which"] = which;
  if (which == "pmatrix") {
    j["matrix"] = p_matrix(src.graph).to_json();
  } else {
    const MLPoly p = pick_poly(src.graph, which);
    j["polynomial"] = p.to_string();
    j["terms"] = p.to_json();
  }
  return {j, 0};
}

Outcome cmd_count(const RunConfig& cfg, const std::string& which, const std::string& method, bool torus) {
  const Source src = load_source(cfg);
  json j = header("count", cfg, &src);
  j["which"] = which;
  j["method"] = method;
  j["torus"] = torus;
  if (method != "brute" && method != "reduced")
    throw Error(ErrorCode::BadParameter, "unknown method '" + method + "'");
  if (method == "reduced" && torus) throw Error(ErrorCode::BadParameter, "torus counts use --method brute");
  json counts = json::array();
  for (int q : q_list(cfg, {2})) {
    const FqField f = make_field(q);
    log(cfg, "counting " + which + " over F_" + std::to_string(q));
    CountReport r;
    if (which == "sing") {
      if (torus || method == "reduced") throw Error(ErrorCode::BadParameter, "sing counts are affine and brute force");
      r = sing_count(src.graph, f, SingMethod::Jacobian, cfg.options());
    } else {
      const MLPoly p = pick_poly(src.graph, which);
      if (method == "reduced") r = count_reduced(p, f);
      else r = torus ? count_zeros_torus(p, f, cfg.options()) : count_zeros(p, f, cfg.options());
    }
    counts.push_back(r.to_json());
  }
  j["counts"] = counts;
  return {j, 0};
}

Outcome cmd_c2(const RunConfig& cfg, const std::string& space, bool at_q) {
  const Source src = load_source(cfg);
  C2Request req;
  if (space != "all") {
    if (space != "param" && space != "dual" && space != "pos")
      throw Error(ErrorCode::BadParameter, "unknown space '" + space + "'");
    req.param = space == "param";
    req.dual = space == "dual";
    req.pos = space == "pos";
  }
  req.at_q = at_q;
  json j = header("c2", cfg, &src);
  j["space"] = space;
  json verdicts = json::array();
  for (int q : q_list(cfg, {2})) {
    log(cfg, "c2 over F_" + std::to_string(q));
    verdicts.push_back(c2_verdict(src.graph, src.id, make_field(q), req, cfg.options()));
  }
  j["verdicts"] = verdicts;
  return {j, 0};
}

Outcome cmd_verify(const RunConfig& cfg, const std::string& theorem) {
  const Source src = load_source(cfg);
  std::vector<Theorem> which;
  if (theorem == "all") {
    which = all_theorems();
  } else {
    const auto t = theorem_from_name(theorem);
    if (!t) throw Error(ErrorCode::BadParameter, "unknown theorem '" + theorem + "'");
    which = {*t};
  }
  json j = header("verify", cfg, &src);
  j["theorem"] = theorem;
  json results = json::array();
  bool pass = true;
  for (Theorem t : which) {
    std::vector<int> qs = theorem_uses_q(t) ? q_list(cfg, {2}) : std::vector<int>{0};
    for (int q : qs) {
      log(cfg, "verifying " + theorem_name(t) + (q ? " at q = " + std::to_string(q) : ""));
      const std::optional<FqField> f = q ? std::optional<FqField>(make_field(q)) : std::nullopt;
      try {
        const TheoremReport r = verify(t, src.graph, f ? &*f : nullptr, cfg.options());
        results.push_back(r.to_json());
        pass &= r.pass;
      } catch (const Error& e) {
        // with "all", theorems whose hypotheses fail are listed as skipped
        if (which.size() == 1 || e.code() != ErrorCode::PreconditionUnmet) throw;
        results.push_back({{"theorem", theorem_name(t)},
                           {"q", q ? json(q) : json(nullptr)},
                           {"skipped", true},
                           {"reason", error_json(e)}});
      }
    }
  }
  j["results"] = results;
  j["pass"] = pass;
  return {j, pass ? 0 : 1};
}

Outcome cmd_admissible(const RunConfig& cfg, const std::string& mode, std::size_t max_entries) {
  const Source src = load_source(cfg);
  json j = header("admissible", cfg, &src);
  j["mode"] = mode;
  if (mode == "structural") {
    j["verdict"] = admissible_structural(src.graph, cfg.options()).to_json(max_entries);
  } else if (mode == "at-q") {
    json verdicts = json::array();
    for (int q : q_list(cfg, {2})) verdicts.push_back(admissible_at_q(src.graph, make_field(q), cfg.options()).to_json());
    j["verdicts"] = verdicts;
  } else {
    throw Error(ErrorCode::BadParameter, "unknown mode '" + mode + "'");
  }
  return {j, 0};
}

Outcome cmd_census(const RunConfig& cfg, int u, int v) {
  const Source src = load_source(cfg);
  const CensusResult c = census(src.graph, u, v);
  json j = header("census", cfg, &src);
  j["u"] = u;
  j["v"] = v;
  j["deleted"] = c.deleted;
  j["contracted"] = c.contracted;
  j["r"] = c.r;
  j["r_bar"] = c.r_bar;
  j["multinomial"] = multinomial(src.graph.edge_count(), c.deleted, c.contracted).str();
  return {j, 0};
}

Outcome cmd_diag(const RunConfig& cfg, const std::string& tree_text) {
  const Source src = load_source(cfg);
  const EdgeSet tree = tree_text.empty() ? lex_first_spanning_tree(src.graph) : parse_edge_list(tree_text);
  json j = header("diag", cfg, &src);
  j["tree"] = tree.to_vector();
  j["diagonalization"] = diagonalization_to_json(diagonalize_wrt_tree(src.graph, tree));
  return {j, 0};
}

Outcome cmd_family(const RunConfig& cfg) {
  const Source src = load_source(cfg);
  json j = header("family", cfg, &src);
  j["summary"] = graph_summary(src.graph);
  j["text"] = format_graph_text(src.graph);
  return {j, 0};
}

Outcome cmd_seed_corpus(const RunConfig& cfg, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  json j = header("seed-corpus", cfg, nullptr);
  json files = json::array();
  for (const NamedGraph& ng : builtin_corpus()) {
    std::string name = ng.name;
    std::replace(name.begin(), name.end(), ':', '_');
    const fs::path path = fs::path(dir) / (name + ".g");
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::BadParameter, "cannot write " + path.string());
    out << "# " << ng.name << "\n" << format_graph_text(ng.graph);
    files.push_back({{"name", ng.name}, {"file", path.string()}});
  }
  j["directory"] = dir;
  j["files"] = files;
  return {j, 0};
}

void emit(const RunConfig& cfg, const json& report) {
  const std::string text = render_report(report);
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParameter, "cannot write " + cfg.out);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"c2lab: graph polynomials, point counts over finite fields and c2 invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", cfg.threads, "worker threads for counting")->check(CLI::Range(1, 256));
  app.add_option("--budget", cfg.budget, "maximum number of enumerated points")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write the JSON report to this file");
  app.add_flag("-v,--verbose", cfg.verbose, "progress messages on stderr");

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family_spec, "built-in family, e.g. wheel:4 or Gn:3");
    sub->add_option("--graph-file", cfg.graph_file, "graph file (text or JSON)");
  };
  auto q_opt = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q_list, "comma-separated field sizes")->delimiter(',');
  };

  std::string which = "psi", method = "brute", space = "all", theorem = "all", mode = "structural", tree, dir;
  bool torus = false, at_q = false;
  int u = 0, v = 0;
  std::size_t max_entries = 1000;

  auto* poly = app.add_subcommand("poly", "print psi, phi or the matrix P_G");
  graph_opts(poly);
  poly->add_option("--which", which, "psi | phi | pmatrix");

  auto* count = app.add_subcommand("count", "point counts of psi, phi or the singular locus");
  graph_opts(count);
  q_opt(count);
  count->add_option("--which", which, "psi | phi | sing");
  count->add_option("--method", method, "brute | reduced");
  count->add_flag("--torus", torus, "count on the torus");

  auto* c2 = app.add_subcommand("c2", "c2 invariants in parametric, dual and position space");
  graph_opts(c2);
  q_opt(c2);
  c2->add_option("--space", space, "param | dual | pos | all");
  c2->add_flag("--at-q", at_q, "also test duality admissibility by counting");

  auto* ver = app.add_subcommand("verify", "recompute both sides of a theorem");
  graph_opts(ver);
  q_opt(ver);
  ver->add_option("--theorem", theorem, "theorem id or all");

  auto* adm = app.add_subcommand("admissible", "duality admissibility");
  graph_opts(adm);
  q_opt(adm);
  adm->add_option("--mode", mode, "structural | at-q");
  adm->add_option("--max-certificate", max_entries, "certificate entries to print");

  auto* cen = app.add_subcommand("census", "count subquotients G\\I//J");
  graph_opts(cen);
  cen->add_option("--u", u)->required();
  cen->add_option("--v", v)->required();

  auto* diag = app.add_subcommand("diag", "diagonalize P_G along a spanning tree");
  graph_opts(diag);
  diag->add_option("--tree", tree, "comma-separated tree edges (default: lexicographically first tree)");

  auto* fam = app.add_subcommand("family", "describe a graph");
  graph_opts(fam);

  auto* seed = app.add_subcommand("seed-corpus", "write the built-in corpus as graph files");
  seed->add_option("--dir", dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Outcome o;
    if (command == "poly") o = cmd_poly(cfg, which);
    else if (command == "count") o = cmd_count(cfg, which == "psi" && !count->count("--which") ? "phi" : which, method, torus);
    else if (command == "c2") o = cmd_c2(cfg, space, at_q);
    else if (command == "verify") o = cmd_verify(cfg, theorem);
    else if (command == "admissible") o = cmd_admissible(cfg, mode, max_entries);
    else if (command == "census") o = cmd_census(cfg, u, v);
    else if (command == "diag") o = cmd_diag(cfg, tree);
    else if (command == "family") o = cmd_family(cfg);
    else o = cmd_seed_corpus(cfg, dir);
    emit(cfg, o.report);
    return o.code;
  } catch (const Error& e) {
    std::cerr << "c2lab: " << to_string(e.code()) << ": " << e.what() << "\n";
    json j = report_envelope(command);
    j["error"] = error_json(e);
    try {
      emit(cfg, j);
    } catch (const Error&) {
    }
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "c2lab: " << e.what() << "\n";
    json j = report_envelope(command);
    j["error"] = {{"code", "Internal"}, {"message", e.what()}};
    emit(cfg, j);
    return 2;
  }
}
