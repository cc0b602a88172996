#include "c2lab/identities.hpp"

#include <array>
#include <functional>
#include <set>

#include "c2lab/dodgson.hpp"
#include "c2lab/error.hpp"
#include "c2lab/graph_poly.hpp"

namespace c2lab {

namespace {

const std::vector<std::pair<Identity, const char*>> kNames = {
    {Identity::ContractionDeletion, "contraction-deletion"},
    {Identity::DodgsonCoefficient, "dodgson-coefficient"},
    {Identity::DodgsonExpanded, "dodgson-expanded"},
    {Identity::DualDodgsonFirst, "dual-dodgson-first"},
    {Identity::DualDodgsonSecond, "dual-dodgson-second"},
    {Identity::Corolla, "corolla"},
    {Identity::CycleSum, "cycle"},
    {Identity::Tadpole, "tadpole"},
    {Identity::DoubleEdge, "double-edge"},
    {Identity::Radical, "radical"},
    {Identity::ResultantLemma, "resultant"},
};

EdgeSet one(int e) { return EdgeSet{e}; }

// Per-graph cache of dual Dodgson symbols phi^{A,B}_L.
class Symbols {
 public:
  explicit Symbols(const Graph& g) : g_(g) {}

  const MLPoly& sym(EdgeSet a, EdgeSet b, EdgeSet lower = {}) {
    const std::array<std::uint64_t, 3> key{a.bits(), b.bits(), lower.bits()};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, phi_sym(g_, a, b, lower)).first->second;
  }
  // phi^A_B: A contracted, B deleted
  const MLPoly& minor(EdgeSet contracted, EdgeSet deleted = {}) {
    return sym(contracted, contracted, deleted);
  }
  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  std::map<std::array<std::uint64_t, 3>, MLPoly> cache_;
};

// +1 / -1 when lhs == s * rhs, 0 when both vanish.
std::optional<int> match_sign(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() && rhs.is_zero()) return 0;
  if (lhs == rhs) return 1;
  if (lhs == -rhs) return -1;
  return std::nullopt;
}

std::string sign_text(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); }

void record(IdentityResult& r, bool ok, const std::string& witness, const std::string& where) {
  ++r.instances;
  if (ok) {
    ++r.witnesses[witness];
  } else {
    ++r.failures;
    r.holds = false;
    if (r.first_failure.empty()) r.first_failure = where;
  }
}

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::BadIndices, what);
}

bool is_edge(const Graph& g, int e) { return e >= 1 && g.has_edge(e); }

// Smallest lambda in {+1,-1}^t with sum lambda_i terms_i == target.
std::optional<std::vector<int>> solve_signs(const MLPoly& target, const std::vector<MLPoly>& terms) {
  const std::size_t t = terms.size();
  if (t > 20) throw Error(ErrorCode::BadParameter, "too many terms for a sign search");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    MLPoly acc;
    for (std::size_t i = 0; i < t; ++i) {
      if ((mask >> i) & 1u)
        acc -= terms[i];
      else
        acc += terms[i];
    }
    if (acc == target) {
      std::vector<int> lambda(t);
      for (std::size_t i = 0; i < t; ++i) lambda[i] = ((mask >> i) & 1u) ? -1 : 1;
      return lambda;
    }
  }
  return std::nullopt;
}

std::string lambda_text(const std::vector<int>& lambda) {
  std::string s = "lambda=";
  for (int l : lambda) s += l > 0 ? '+' : '-';
  return s;
}

std::string where_text(const IdentityIndices& x) {
  std::string s;
  auto add = [&](const char* name, const std::string& v) {
    if (!s.empty()) s += ' ';
    s += name;
    s += '=';
    s += v;
  };
  if (!x.i.empty()) add("I", x.i.to_string());
  if (!x.j.empty()) add("J", x.j.to_string());
  if (!x.k.empty()) add("K", x.k.to_string());
  if (!x.s.empty()) add("S", x.s.to_string());
  if (x.a) add("a", std::to_string(x.a));
  if (x.b) add("b", std::to_string(x.b));
  if (x.x) add("x", std::to_string(x.x));
  if (x.e1) add("e1", std::to_string(x.e1));
  if (x.e2) add("e2", std::to_string(x.e2));
  if (x.e3) add("e3", std::to_string(x.e3));
  if (x.vertex) add("v", std::to_string(x.vertex));
  if (!x.edges.empty()) add("edges", x.edges.to_string());
  return s;
}

// ---- individual checks ----

void contraction_deletion(Symbols& sy, const IdentityIndices& x, IdentityResult& r) {
  const Graph& g = sy.graph();
  const int k = x.e1;
  require(is_edge(g, k), "contraction-deletion needs an edge e1");
  auto [up, low] = coeff_and_rest(phi(g), k);
  const bool ok = up == phi_minor(g, one(k), {}) && low == phi_minor(g, {}, one(k));
  record(r, ok, "exact", where_text(x));
}

void dodgson_pair(Symbols& sy, const IdentityIndices& x, IdentityResult& r, bool expanded) {
  const Graph& g = sy.graph();
  const int i = x.e1, j = x.e2;
  require(is_edge(g, i) && is_edge(g, j) && i != j, "Dodgson identity needs two distinct edges e1, e2");
  const EdgeSet I = one(i), J = one(j), IJ = I | J;
  const Poly rhs = Poly(sy.sym(I, J)) * Poly(sy.sym(I, J));
  const Poly a = Poly(sy.minor(J, I)) * Poly(sy.minor(I, J));
  const Poly b = Poly(sy.minor(IJ)) * Poly(sy.minor({}, IJ));
  // phi^j_i phi^i_j + sigma phi^{ij} phi_{ij}
  std::optional<int> sigma;
  for (int s : {1, -1}) {
    const Poly lhs = a + b * BigInt(s);
    if (!(lhs == rhs)) continue;
    if (expanded) {
      const Poly top = Poly(sy.minor(J)) * Poly(sy.minor(I)) +
                       Poly(sy.minor(IJ)) * Poly(sy.minor({})) * BigInt(s);
      if (!(top == rhs)) continue;
    }
    sigma = s;
    break;
  }
  // both signs work exactly when phi^{ij} phi_{ij} vanishes
  if (sigma && b.is_zero()) sigma = 0;
  record(r, sigma.has_value(), "sign=" + (sigma ? sign_text(*sigma) : std::string("?")), where_text(x));
}

bool valid_sets(const Graph& g, const IdentityIndices& x, std::initializer_list<int> singles) {
  if (!(x.i | x.j | x.k | x.s).subset_of(g.edges())) return false;
  if (!x.i.disjoint(x.j) || !(x.i | x.j).disjoint(x.k) || !(x.i | x.j | x.k).disjoint(x.s)) return false;
  const EdgeSet used = x.i | x.j | x.k | x.s;
  for (int e : singles)
    if (!is_edge(g, e) || used.contains(e)) return false;
  return true;
}

// t1 - t2 = +-rhs as printed; otherwise t1 + t2 = +-rhs, which is where the
// minor signs put it for some index positions.
void record_two_term(IdentityResult& r, const Poly& t1, const Poly& t2, const Poly& rhs,
                     const std::string& where) {
  if (const auto s = match_sign(t1 - t2, rhs)) {
    record(r, true, "sign=" + sign_text(*s), where);
  } else if (const auto s2 = match_sign(t1 + t2, rhs)) {
    record(r, true, "flipped,sign=" + sign_text(*s2), where);
  } else {
    record(r, false, "", where);
  }
}

void dual_dodgson_first(Symbols& sy, const IdentityIndices& x, IdentityResult& r) {
  const Graph& g = sy.graph();
  require(valid_sets(g, x, {x.a, x.b, x.x}) && x.i.size() == x.j.size() && x.x != x.a && x.x != x.b,
          "first Dodgson identity needs disjoint I,J,K,S with |I|=|J| and a,b,x outside, x != a,b");
  const EdgeSet IK = x.i | x.k, JK = x.j | x.k, A = one(x.a), B = one(x.b), X = one(x.x), S = x.s;
  const Poly t1 = Poly(sy.sym(IK | X, JK | X, S)) * Poly(sy.sym(IK | A, JK | B, S | X));
  const Poly t2 = Poly(sy.sym(IK, JK, S | X)) * Poly(sy.sym(IK | A | X, JK | B | X, S));
  const Poly rhs = Poly(sy.sym(IK | X, JK | B, S)) * Poly(sy.sym(IK | A, JK | X, S));
  record_two_term(r, t1, t2, rhs, where_text(x));
}

void dual_dodgson_second(Symbols& sy, const IdentityIndices& x, IdentityResult& r) {
  const Graph& g = sy.graph();
  require(valid_sets(g, x, {x.a, x.b, x.x}) && x.j.size() == x.i.size() + 1 && x.a != x.b &&
              x.x != x.a && x.x != x.b,
          "second Dodgson identity needs disjoint I,J,K,S with |J|=|I|+1 and distinct a,b,x outside");
  const EdgeSet IK = x.i | x.k, JK = x.j | x.k, A = one(x.a), B = one(x.b), X = one(x.x), S = x.s;
  const Poly t1 = Poly(sy.sym(IK | A | X, JK | X, S)) * Poly(sy.sym(IK | B, JK, S | X));
  const Poly t2 = Poly(sy.sym(IK | A, JK, S | X)) * Poly(sy.sym(IK | B | X, JK | X, S));
  const Poly rhs = Poly(sy.sym(IK | X, JK, S)) * Poly(sy.sym(IK | A | B, JK | X, S));
  record_two_term(r, t1, t2, rhs, where_text(x));
}

EdgeSet corolla_of(const Graph& g, int v) {
  EdgeSet c;
  for (const Edge& e : g.edge_list())
    if (e.u == v || e.v == v) c.insert(e.label);
  return c;
}

void corolla(Symbols& sy, const IdentityIndices& x, IdentityResult& r) {
  const Graph& g = sy.graph();
  require(x.vertex >= 1 && x.vertex <= g.vertex_count(), "corolla needs a vertex");
  const EdgeSet c = corolla_of(g, x.vertex);
  require(c.contains(x.e1), "corolla edge e1 must be incident to the vertex");
  const MLPoly target = sy.minor({}, one(x.e1));
  std::vector<MLPoly> terms;
  for (int i : c - one(x.e1)) terms.push_back(sy.sym(one(x.e1), one(i)).times_variable(i));
  const auto lambda = solve_signs(target, terms);
  record(r, lambda.has_value(), lambda ? lambda_text(*lambda) : "", where_text(x));
}

void cycle_sum(Symbols& sy, const IdentityIndices& x, IdentityResult& r) {
  const Graph& g = sy.graph();
  bool is_cycle = false;
  for (EdgeSet c : cycles(g)) is_cycle = is_cycle || c == x.edges;
  require(is_cycle && x.edges.contains(x.e1), "cycle identity needs a cycle containing e1");
  const MLPoly target = sy.minor(one(x.e1));
  std::vector<MLPoly> terms;
  for (int i : x.edges - one(x.e1)) terms.push_back(sy.sym(one(x.e1), one(i)));
  const auto lambda = solve_signs(target, terms);
  record(r, lambda.has_value(), lambda ? lambda_text(*lambda) : "", where_text(x));
}

void tadpole(Symbols& sy, const IdentityIndices& x, IdentityResult& r) {
  const Graph& g = sy.graph();
  require(is_edge(g, x.e1) && g.edge(x.e1).is_self_loop(), "tadpole needs a self-loop e1");
  record(r, phi(g) == sy.minor({}, one(x.e1)), "exact", where_text(x));
}

void double_edge(Symbols& sy, const IdentityIndices& x, IdentityResult& r) {
  const Graph& g = sy.graph();
  require(is_edge(g, x.e1) && is_edge(g, x.e2) && x.e1 != x.e2, "double edge needs two edges");
  const Edge& p = g.edge(x.e1);
  const Edge& q = g.edge(x.e2);
  require(!p.is_self_loop() && std::minmax(p.u, p.v) == std::minmax(q.u, q.v),
          "double edge needs two parallel edges");
  MLPoly sum = MLPoly::variable(x.e1) + MLPoly::variable(x.e2);
  const MLPoly rhs = sy.minor(one(x.e2), one(x.e1)).times_disjoint(sum) + sy.minor({}, one(x.e1) | one(x.e2));
  record(r, phi(g) == rhs, "exact", where_text(x));
}

void radical(Symbols& sy, const IdentityIndices& x, IdentityResult& r) {
  const Graph& g = sy.graph();
  const int i = x.e1, k = x.e2;
  require(is_edge(g, i) && is_edge(g, k) && i != k, "radical identity needs two distinct edges");
  const EdgeSet I = one(i), K = one(k);
  const Poly lhs = Poly(sy.sym(I, K)) * Poly(sy.sym(I, K));
  const Poly rhs = Poly(sy.minor(K)) * Poly(sy.minor(I, K)) - Poly(sy.minor({}, K)) * Poly(sy.minor(I | K));
  const bool res_ok = resultant(phi(g), sy.minor(I), k) == rhs;
  const auto s = match_sign(lhs, rhs);
  record(r, res_ok && s.has_value(), "sign=" + (s ? sign_text(*s) : std::string("?")), where_text(x));
}

void resultant_lemma(Symbols& sy, const IdentityIndices& x, IdentityResult& r) {
  const Graph& g = sy.graph();
  const int i = x.e1, j = x.e2, k = x.e3;
  require(is_edge(g, i) && is_edge(g, j) && is_edge(g, k) && i != j && j != k && i != k,
          "resultant lemma needs three distinct edges");
  const Poly lhs = resultant(sy.minor(one(i)), sy.minor(one(j)), k);
  const std::array<std::pair<EdgeSet, const char*>, 3> pairs = {
      {{one(i) | one(j), "ij"}, {one(i) | one(k), "ik"}, {one(j) | one(k), "jk"}}};
  const Poly jk = Poly(sy.sym(one(j), one(k)));
  const Poly ik = Poly(sy.sym(one(i), one(k)));
  std::vector<std::pair<std::string, Poly>> xs, ys;
  for (const auto& [a, an] : pairs)
    for (const auto& [b, bn] : pairs) {
      const std::string name = std::string("phi^{") + an + "," + bn + "}";
      const Poly f = Poly(sy.sym(a, b));
      xs.emplace_back(name, f * jk);
      ys.emplace_back(name, f * ik);
    }
  std::vector<std::string> found;
  for (const auto& [xn, xp] : xs)
    for (const auto& [yn, yp] : ys)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          if (xp * BigInt(s1) + yp * BigInt(s2) == lhs)
            found.push_back((s1 > 0 ? "+" : "-") + xn + "phi^{j,k}" + (s2 > 0 ? "+" : "-") + yn + "phi^{i,k}");
  ++r.instances;
  if (found.empty()) {
    ++r.failures;
    r.holds = false;
    if (r.first_failure.empty()) r.first_failure = where_text(x);
  }
  for (const auto& f : found) ++r.witnesses[f];
}

using Check = void (*)(Symbols&, const IdentityIndices&, IdentityResult&);

Check checker(Identity id) {
  switch (id) {
    case Identity::ContractionDeletion: return contraction_deletion;
    case Identity::DodgsonCoefficient:
      return [](Symbols& s, const IdentityIndices& x, IdentityResult& r) { dodgson_pair(s, x, r, false); };
    case Identity::DodgsonExpanded:
      return [](Symbols& s, const IdentityIndices& x, IdentityResult& r) { dodgson_pair(s, x, r, true); };
    case Identity::DualDodgsonFirst: return dual_dodgson_first;
    case Identity::DualDodgsonSecond: return dual_dodgson_second;
    case Identity::Corolla: return corolla;
    case Identity::CycleSum: return cycle_sum;
    case Identity::Tadpole: return tadpole;
    case Identity::DoubleEdge: return double_edge;
    case Identity::Radical: return radical;
    case Identity::ResultantLemma: return resultant_lemma;
  }
  throw Error(ErrorCode::BadParameter, "unknown identity");
}

// Every I,J,K,S (pairwise disjoint, |J| = |I| + shift) leaving room for
// a, b, x outside them.
void for_each_frame(const Graph& g, int shift, int room,
                    const std::function<void(EdgeSet, EdgeSet, EdgeSet, EdgeSet)>& f) {
  const EdgeSet all = g.edges();
  for_each_subset(all, [&](EdgeSet i) {
    for_each_subset(all - i, [&](EdgeSet j) {
      if (j.size() != i.size() + shift) return;
      for_each_subset(all - i - j, [&](EdgeSet k) {
        for_each_subset(all - i - j - k, [&](EdgeSet s) {
          if ((all - i - j - k - s).size() >= room) f(i, j, k, s);
        });
      });
    });
  });
}

}  // namespace

std::string identity_name(Identity id) {
  for (const auto& [i, n] : kNames)
    if (i == id) return n;
  return "?";
}

std::optional<Identity> identity_from_name(const std::string& name) {
  for (const auto& [i, n] : kNames)
    if (name == n) return i;
  return std::nullopt;
}

std::vector<Identity> all_identities() {
  std::vector<Identity> out;
  for (const auto& [i, n] : kNames) out.push_back(i);
  return out;
}

IdentityResult check_identity(Identity id, const Graph& g, const IdentityIndices& idx) {
  Symbols sy(g);
  IdentityResult r;
  checker(id)(sy, idx, r);
  return r;
}

IdentityResult check_identity_all(Identity id, const Graph& g) {
  Symbols sy(g);
  IdentityResult r;
  const Check run = checker(id);
  const std::vector<int> edges = g.edges().to_vector();
  auto go = [&](const IdentityIndices& x) { run(sy, x, r); };
  switch (id) {
    case Identity::ContractionDeletion:
      for (int e : edges) go({.e1 = e});
      break;
    case Identity::DodgsonCoefficient:
    case Identity::DodgsonExpanded:
    case Identity::Radical:
      for (int a : edges)
        for (int b : edges)
          if (a != b) go({.e1 = a, .e2 = b});
      break;
    case Identity::DualDodgsonFirst:
    case Identity::DualDodgsonSecond: {
      const bool first = id == Identity::DualDodgsonFirst;
      for_each_frame(g, first ? 0 : 1, first ? 2 : 3, [&](EdgeSet i, EdgeSet j, EdgeSet k, EdgeSet s) {
        const EdgeSet rest = g.edges() - (i | j | k | s);
        for (int a : rest)
          for (int b : rest) {
            if (!first && a == b) continue;
            for (int xx : rest)
              if (xx != a && xx != b) go({.i = i, .j = j, .k = k, .s = s, .a = a, .b = b, .x = xx});
          }
      });
      break;
    }
    case Identity::Corolla:
      for (int v = 1; v <= g.vertex_count(); ++v)
        for (int e : corolla_of(g, v))
          if (!g.edge(e).is_self_loop()) go({.e1 = e, .vertex = v});
      break;
    case Identity::CycleSum:
      for (EdgeSet c : cycles(g))
        for (int e : c) go({.e1 = e, .edges = c});
      break;
    case Identity::Tadpole:
      for (int e : edges)
        if (g.edge(e).is_self_loop()) go({.e1 = e});
      break;
    case Identity::DoubleEdge:
      for (int a : edges)
        for (int b : edges) {
          if (a == b || g.edge(a).is_self_loop()) continue;
          const Edge& p = g.edge(a);
          const Edge& q = g.edge(b);
          if (std::minmax(p.u, p.v) == std::minmax(q.u, q.v)) go({.e1 = a, .e2 = b});
        }
      break;
    case Identity::ResultantLemma:
      for (int a : edges)
        for (int b : edges)
          for (int c : edges)
            if (a != b && b != c && a != c) go({.e1 = a, .e2 = b, .e3 = c});
      break;
  }
  return r;
}

}  // namespace c2lab
