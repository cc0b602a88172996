// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--cli PATH] [k ...]
#include <algorithm>
#include <array>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <sys/wait.h>

#include "c2lab/c2.hpp"
#include "c2lab/census.hpp"
#include "c2lab/count.hpp"
#include "c2lab/dodgson.hpp"
#include "c2lab/error.hpp"
#include "c2lab/families.hpp"
#include "c2lab/graph_poly.hpp"
#include "c2lab/identities.hpp"
#include "c2lab/matform.hpp"
#include "c2lab/position.hpp"
#include "c2lab/singular.hpp"
#include "c2lab/verify.hpp"

using namespace c2lab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 12) notes.push_back("FAIL " + why);
  }
  void note(const std::string& s) { notes.push_back(s); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::string cli_path;

CountOptions par() {
  CountOptions o;
  o.threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  return o;
}

std::vector<NamedGraph> corpus_up_to(int max_edges) {
  std::vector<NamedGraph> out;
  for (auto& ng : builtin_corpus())
    if (is_connected(ng.graph) && ng.graph.edge_count() <= max_edges) out.push_back(ng);
  return out;
}

std::string str(const BigInt& b) { return b.str(); }

// 1: determinantal representations
Outcome symbolic() {
  Outcome o;
  int graphs = 0;
  for (const auto& [name, g] : corpus_up_to(8)) {
    ++graphs;
    o.expect(dodgson(g, {}, {}) == psi(g), name + ": psi != det M");
    o.expect(p_matrix(g).determinant() == Poly(phi(g)), name + ": phi != det P");
  }
  o.expect(graphs >= 20, "corpus too small");
  o.note(std::to_string(graphs) + " corpus graphs with <= 8 edges");
  return o;
}

// 2: contraction-deletion, Dodgson and dual Dodgson identities
Outcome dodgson_suite() {
  Outcome o;
  const auto graphs = connected_multigraphs(6, true);
  const std::vector<Identity> ids{Identity::ContractionDeletion, Identity::DodgsonCoefficient,
                                  Identity::DodgsonExpanded,     Identity::DualDodgsonFirst,
                                  Identity::DualDodgsonSecond,   Identity::Corolla,
                                  Identity::CycleSum,            Identity::Tadpole,
                                  Identity::DoubleEdge};
  for (Identity id : ids) {
    long instances = 0;
    std::map<std::string, int> witnesses;
    for (const Graph& g : graphs) {
      const IdentityResult r = check_identity_all(id, g);
      instances += r.instances;
      if (!r.holds) o.fail(identity_name(id) + ": " + r.first_failure);
      for (const auto& [w, c] : r.witnesses) witnesses[w.substr(0, 12)] += c;
    }
    std::string ws;
    for (const auto& [w, c] : witnesses) ws += " " + w + "x" + std::to_string(c);
    o.note(identity_name(id) + ": " + std::to_string(instances) + " instances," + ws.substr(0, 120));
  }
  o.note(std::to_string(graphs.size()) + " connected graphs with <= 6 edges");
  return o;
}

// 3: diagonalization along spanning trees
Outcome diagonalization() {
  Outcome o;
  long pairs = 0;
  for (const Graph& g : connected_multigraphs(7, true)) {
    const Poly want(phi(g));
    for (EdgeSet t : spanning_trees(g)) {
      const Diagonalization d = diagonalize_wrt_tree(g, t);
      ++pairs;
      if (!diagonal_contract(d) || !diagonal_contract_modulo(d, g) || d.matrix.determinant() != want)
        o.fail("contract or determinant on tree " + t.to_string());
    }
  }
  Graph host;
  for (const auto& [name, g] : builtin_corpus())
    if (name == "tree-example") host = g;
  const Diagonalization d = diagonalize_wrt_tree(host, EdgeSet{1, 2, 3, 4, 5, 6});
  const std::vector<RowColOp> want{{4, 2}, {3, 2}, {6, 5}, {5, 1}, {2, 1}};
  o.expect(d.ops == want, "worked example op list");
  o.expect(diagonal_contract_modulo(d, host), "worked example contract");
  o.note(std::to_string(pairs) + " (graph, tree) pairs with <= 7 edges; worked example ops (4,2),(3,2),(6,5),(5,1),(2,1)");
  return o;
}

MLPoly random_poly(std::mt19937& rng, int vars) {
  MLPoly p(EdgeSet::range(vars));
  const int terms = 1 + static_cast<int>(rng() % 8);
  for (int t = 0; t < terms; ++t) {
    const std::uint64_t mono = rng() & ((std::uint64_t{1} << vars) - 1);
    const int c = static_cast<int>(rng() % 7) - 3;
    if (c) p.add_term(EdgeSet(mono), c);
  }
  return p;
}

// 4: counting oracles
Outcome counting_oracles() {
  Outcome o;
  std::mt19937 rng(20261016);
  int random_cases = 0;
  for (int q : {2, 3, 4}) {
    const FqField f = make_field(q);
    for (int k = 0; k < 70; ++k) {
      const int vars = 1 + static_cast<int>(rng() % 10);
      const MLPoly p = random_poly(rng, vars);
      ++random_cases;
      o.expect(count_reduced(p, f, vars).raw == count_zeros({p}, f, vars).raw, "random polynomial " + p.to_string());
    }
  }
  int graph_cases = 0, sums = 0;
  for (const auto& [name, g] : corpus_up_to(12)) {
    for (int q : {2, 3}) {
      const FqField f = make_field(q);
      for (const MLPoly& p : {psi(g), phi(g)}) {
        const BigInt direct = count_zeros(p, f, par()).raw;
        ++graph_cases;
        o.expect(count_reduced(p, f).raw == direct, name + ": reduced count");
        if (g.edge_count() <= 10) {
          ++sums;
          o.expect(count_by_zero_pattern(p, f) == direct, name + ": zero-pattern sum");
          o.expect(count_by_inclusion_exclusion(p, f) == direct, name + ": inclusion-exclusion sum");
        }
      }
    }
  }
  long torus_pairs = 0;
  for (const Graph& g : connected_multigraphs(6, true)) {
    for_each_subset(g.edges(), [&](EdgeSet i) {
      for_each_subset(g.edges() - i, [&](EdgeSet j) {
        const MLPoly a = phi_minor(g, i, j), b = psi_minor(g, j, i);
        const int vars = g.edge_count() - i.size() - j.size();
        ++torus_pairs;
        for (int q : {2, 3}) {
          const FqField f = make_field(q);
          if (count_zeros_torus({a}, f, vars).raw != count_zeros_torus({b}, f, vars).raw)
            o.fail("torus duality " + i.to_string() + " " + j.to_string());
        }
      });
    });
  }
  o.note(std::to_string(random_cases) + " random polynomials, " + std::to_string(graph_cases) +
         " corpus graph polynomials, " + std::to_string(sums) + " sum checks, " + std::to_string(torus_pairs) +
         " torus (I,J) pairs at q = 2, 3");
  return o;
}

// 5: divisibility and singular-locus agreement
Outcome divisibility() {
  Outcome o;
  int checks = 0, sing_checks = 0, pointwise = 0;
  for (const auto& [name, g] : corpus_up_to(12)) {
    for (int q : {2, 3, 4, 5}) {
      const FqField f = make_field(q);
      const double points = std::pow(double(q), g.edge_count());
      auto count = [&](const MLPoly& p) {
        return points <= 2e7 ? count_zeros(p, f, par()) : count_reduced(p, f);
      };
      if (g.n() >= 2) {
        ++checks;
        o.expect(count(psi(g)).mod_q2 == 0, name + ": q^2 | [Psi] at q = " + std::to_string(q));
      }
      if (g.loop_number() >= 2) {
        ++checks;
        o.expect(count(phi(g)).mod_q2 == 0, name + ": q^2 | [phi] at q = " + std::to_string(q));
        // elimination prunes most of the space, so the largest case fits with a raised budget
        CountOptions wide = par();
        wide.budget = 1e9;
        ++sing_checks;
        o.expect(sing_count(g, f, SingMethod::Jacobian, wide).mod_q == 0,
                 name + ": q | [Sing] at q = " + std::to_string(q));
      }
      if (points <= 2e6) {
        ++pointwise;
        o.expect(sing_pointwise(g, f, par()).disagreements == 0, name + ": singular-locus methods disagree");
      }
    }
  }
  o.note(std::to_string(checks) + " q^2 divisibility checks, " + std::to_string(sing_checks) +
         " Sing divisibility checks, " +
         std::to_string(pointwise) + " pointwise method comparisons");
  return o;
}

// 6: c2 in all spaces
Outcome c2_spaces() {
  Outcome o;
  const std::vector<std::pair<std::string, Graph>> graphs{{"K4", family("complete", 4)},
                                                          {"WS4", family("wheel", 4)},
                                                          {"WS5", family("wheel", 5)},
                                                          {"G3", family("Gn", 3)},
                                                          {"G4", family("Gn", 4)}};
  std::string table;
  for (const auto& [name, g] : graphs) {
    for (int q : {2, 3, 5}) {
      const FqField f = make_field(q);
      const int pv = c2_param(g, f, par()).value, dv = c2_dual(g, f, par()).value;
      o.expect(pv == dv, name + ": c2_param != c2_dual at q = " + std::to_string(q));
      table += " " + name + "/" + std::to_string(q) + ":" + std::to_string(pv) + "," + std::to_string(dv);
      if (q != 5 && g.n() <= 4) {
        const int sv = c2_pos(g, f, par()).value;
        o.expect(sv == dv, name + ": c2_pos != c2_dual at q = " + std::to_string(q));
        table += "," + std::to_string(sv);
      }
    }
  }
  const std::vector<std::pair<std::string, Graph>> controls{
      {"cycle:4", family("cycle", 4)},
      {"k4-minus-edge", Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})},
      {"G3-minus-edge", delete_edges(family("Gn", 3), EdgeSet{1})}};
  for (const auto& [name, g] : controls)
    for (int q : {2, 3}) o.expect(c2_pos(g, make_field(q), par()).value == 0, name + ": c2_pos != 0");
  o.note("graph/q:param,dual[,pos]" + table);
  o.note("controls cycle:4, k4-minus-edge, G3-minus-edge: c2_pos = 0 at q = 2, 3");
  return o;
}

// 7: quadric union congruence mod q^3
Outcome quadric_congruence() {
  Outcome o;
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"K4", family("complete", 4)},
                                                                          {"G3", family("Gn", 3)}}) {
    for (int q : {2, 3}) {
      const FqField f = make_field(q);
      const CountReport lhs = quadric_union_count(g, f, par());
      const BigInt direct = quadric_histogram_direct(g, f, par()).union_count();
      const BigInt rhs = quadric_congruence_rhs(g, f, par());
      o.expect(lhs.raw == direct, name + ": Gray-code and direct union counts differ");
      o.expect(lhs.mod_q3 == rhs, name + ": union mod q^3 != right-hand side");
      o.note(name + " q=" + std::to_string(q) + ": union=" + str(lhs.raw) + " mod q^3=" + str(lhs.mod_q3) +
             " rhs=" + str(rhs));
    }
  }
  return o;
}

// independent census: every edge is deleted, contracted or kept
std::pair<long, long> census_by_assignment(const Graph& g, int deleted, int contracted) {
  const auto edges = g.edge_list();
  const int n_edges = static_cast<int>(edges.size());
  long r = 0, r_bar = 0;
  std::vector<int> state(n_edges, 0);
  while (true) {
    int nd = 0, nc = 0;
    for (int s : state) nd += s == 1, nc += s == 2;
    if (nd == deleted && nc == contracted) {
      ++r_bar;
      // connectivity of G \ I and acyclicity of J, by plain union-find
      std::vector<int> up(g.vertex_count() + 1), upj(g.vertex_count() + 1);
      std::iota(up.begin(), up.end(), 0);
      std::iota(upj.begin(), upj.end(), 0);
      std::function<int(std::vector<int>&, int)> find = [&](std::vector<int>& p, int x) {
        return p[x] == x ? x : p[x] = find(p, p[x]);
      };
      int comps = g.vertex_count();
      bool acyclic = true;
      for (int k = 0; k < n_edges; ++k) {
        if (state[k] == 1) continue;
        const int a = find(up, edges[k].u), b = find(up, edges[k].v);
        if (a != b) up[a] = b, --comps;
        if (state[k] == 2) {
          const int x = find(upj, edges[k].u), y = find(upj, edges[k].v);
          if (x == y) acyclic = false;
          else upj[x] = y;
        }
      }
      if (comps == 1 && acyclic) ++r;
    }
    int k = 0;
    while (k < n_edges && ++state[k] == 3) state[k++] = 0;
    if (k == n_edges) break;
  }
  return {r, r_bar};
}

// 8: census statements
Outcome census_suite() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    const Graph g = family("Gn", n);
    const TheoremReport rep = verify(Theorem::GnCensus, g, nullptr);
    const long r12 = rep.details["r12"], r21 = rep.details["r21"];
    o.expect(census_by_assignment(g, g.loop_number() - 1, g.n() - 2).first == r12, "census cross-check r12");
    o.expect(census_by_assignment(g, g.loop_number() - 2, g.n() - 1).first == r21, "census cross-check r21");
    o.note("G_" + std::to_string(n) + ": r12=" + std::to_string(r12) + " (closed form " + str(gn_r12_closed_form(n)) +
           "), r21=" + std::to_string(r21) + " (closed form " + str(gn_r21_closed_form(n)) + ")");
    o.expect(BigInt(r12) == gn_r12_closed_form(n), "G_" + std::to_string(n) + ": r12 != closed form");
    o.expect(BigInt(r21) == gn_r21_closed_form(n), "G_" + std::to_string(n) + ": r21 != closed form");
  }
  int logdiv = 0;
  for (const auto& [name, g] : corpus_up_to(12)) {
    if (!g.is_log_divergent()) continue;
    ++logdiv;
    o.expect(verify(Theorem::TreeCensus, g, nullptr).pass, name + ": tree census");
    o.expect(verify(Theorem::CensusSymmetry, g, nullptr).pass, name + ": census symmetry");
  }
  o.note(std::to_string(logdiv) + " log-divergent corpus graphs for the tree census and its symmetry");
  long rbar_cases = 0, literal_mismatch = 0, multinomial_mismatch = 0;
  std::string first_mismatch;
  for (const auto& [name, g] : corpus_up_to(10)) {
    for (int u = 0; u <= g.loop_number(); ++u)
      for (int v = 0; v <= g.n(); ++v) {
        if (u + v > g.edge_count() || g.loop_number() - u + g.n() - v > g.edge_count()) continue;
        const CensusResult c = census(g, u, v);
        ++rbar_cases;
        const BigInt literal = multinomial(g.edge_count(), u, v);
        if (BigInt(c.r_bar) != literal) {
          if (!literal_mismatch++)
            first_mismatch = name + " u=" + std::to_string(u) + " v=" + std::to_string(v) + ": r_bar=" +
                             std::to_string(c.r_bar) + ", N!/(u!v!(N-u-v)!)=" + str(literal);
        }
        if (BigInt(c.r_bar) != multinomial(g.edge_count(), c.deleted, c.contracted)) ++multinomial_mismatch;
      }
  }
  o.expect(literal_mismatch == 0, std::to_string(literal_mismatch) + " of " + std::to_string(rbar_cases) +
                                      " r_bar values differ from N!/(u!v!(N-u-v)!), first: " + first_mismatch);
  o.expect(multinomial_mismatch == 0, "r_bar differs from the multinomial in |I|, |J|");
  o.note(std::to_string(rbar_cases) + " r_bar cases; multinomial in |I|,|J| matches " +
         std::to_string(rbar_cases - multinomial_mismatch));
  return o;
}

// 9: triangle formula and Chevalley-Warning on the triangle pairs
Outcome triangle_suite() {
  Outcome o;
  int graphs = 0, tri_checks = 0, cw_checks = 0, cw_guards = 0;
  for (const auto& [name, g] : corpus_up_to(12)) {
    const auto tris = triangles(g);
    if (tris.empty() || g.loop_number() < 3) continue;
    ++graphs;
    for (int q : {2, 3}) {
      const FqField f = make_field(q);
      const int d = c2_dual(g, f, par()).value;
      for (EdgeSet t : tris) {
        ++tri_checks;
        o.expect(c2_dual_triangle(g, t, f, par()).value == d, name + ": triangle " + t.to_string());
      }
      for (EdgeSet t : tris) {
        auto cw = [&](const Graph& h, const std::string& where) {
          const auto [a, b] = triangle_pair(h, t);
          const int vars = h.edge_count() - 3;
          if (a.degree() + b.degree() < vars) {
            ++cw_checks;
            o.expect(chevalley_warning_check({a, b}, f, vars, par()), where + ": pair count not divisible by q");
          } else {
            ++cw_guards;
            bool threw = false;
            try {
              chevalley_warning_check({a, b}, f, vars, par());
            } catch (const Error& e) {
              threw = e.code() == ErrorCode::PreconditionUnmet;
            }
            o.expect(threw, where + ": precondition guard");
            // the degree bound fails exactly when 2n >= N
            o.expect(2 * h.n() >= h.edge_count(), where + ": unexpected degree sum");
          }
        };
        cw(g, name);
        // subquotients G // e with |I| = 0 < |J| = 1 that keep the triangle
        for (int e : (g.edges() - t).to_vector()) {
          if (g.edge(e).is_self_loop()) continue;
          const Graph h = contract_edges(g, EdgeSet{e});
          const auto ht = triangles(h);
          if (std::find(ht.begin(), ht.end(), t) != ht.end()) cw(h, name + "//" + std::to_string(e));
        }
      }
    }
  }
  o.note(std::to_string(graphs) + " corpus graphs with a triangle and h >= 3, " + std::to_string(tri_checks) +
         " triangle checks, " + std::to_string(cw_checks) + " Chevalley-Warning vanishing checks, " +
         std::to_string(cw_guards) + " precondition guards");
  return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 10: byte-identical reports across thread counts
Outcome determinism() {
  Outcome o;
  if (cli_path.empty()) {
    o.fail("no --cli path given");
    return o;
  }
  const std::string dir = (std::filesystem::temp_directory_path() / "c2lab-acceptance-corpus").string();
  o.expect(run_cli("seed-corpus --dir \"" + dir + "\"").first == 0, "seed-corpus");
  const std::vector<std::string> commands{
      "c2 --family wheel:4 --space all --q 2,3",
      "c2 --family Gn:3 --space all --q 2,3 --at-q",
      "count --family complete:4 --which psi --q 2,3,4,5",
      "count --family wheel:4 --which phi --torus --q 3",
      "count --family wheel:4 --which phi --method reduced --q 2,3",
      "count --family wheel:5 --which sing --q 2",
      "verify --theorem all --family complete:4 --q 2,3",
      "verify --theorem gn-census --family Gn:4",
      "admissible --mode structural --graph-file \"" + dir + "/k5-subdivided.g\" --max-certificate 50",
      "admissible --mode at-q --family wheel:4 --q 2,3",
      "census --family Gn:4 --u 1 --v 2",
      "diag --family wheel:4",
      "poly --family wheel:3 --which phi",
      "family --family Gn:3",
      "c2 --family complete:5 --q 2 --budget 100",
  };
  for (const std::string& c : commands) {
    const auto a = run_cli("--threads 1 " + c), b = run_cli("--threads 8 " + c);
    o.expect(a.first == b.first && a.second == b.second && !a.second.empty(), "reports differ: " + c);
  }
  o.note(std::to_string(commands.size()) + " CLI reports compared at 1 and 8 threads");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) cli_path = argv[++i];
    else selected.push_back(std::stoi(a));
  }
  const std::vector<Criterion> all{
      {1, "psi = det M(G), phi = det P_G", 10, symbolic},
      {2, "Dodgson identity suite", 60, dodgson_suite},
      {3, "diagonalization along spanning trees", 30, diagonalization},
      {4, "counting oracles", 300, counting_oracles},
      {5, "divisibility of point counts", 300, divisibility},
      {6, "c2 across spaces", 900, c2_spaces},
      {7, "quadric union congruence mod q^3", 600, quadric_congruence},
      {8, "subquotient census", 120, census_suite},
      {9, "triangle formula", 600, triangle_suite},
      {10, "determinism across thread counts", 600, determinism},
  };
  bool all_pass = true;
  for (const Criterion& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds));
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s) " << c.title;
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    all_pass &= o.pass;
  }
  return all_pass ? 0 : 1;
}
