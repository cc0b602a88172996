#include "c2lab/singular.hpp"

#include <cmath>
#include <future>

#include "c2lab/error.hpp"
#include "c2lab/fq_eval.hpp"
#include "c2lab/graph_poly.hpp"
#include "c2lab/matform.hpp"

namespace c2lab {

namespace {

using Elem = FqField::Elem;

// P_G entries as sparse linear forms (label, coefficient code).
struct LinearMatrix {
  int n = 0;
  std::vector<std::vector<std::pair<int, Elem>>> entries;

  LinearMatrix(const PolyMatrix& m, const FqField& f) : n(m.dim()), entries(n * n) {
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        for (const auto& [mono, coeff] : m.at(r, c).terms()) {
          const Elem e = static_cast<Elem>(static_cast<int>(mod_floor(coeff, BigInt(f.p()))));
          if (e) entries[(r - 1) * n + (c - 1)].emplace_back(mono.min(), e);
        }
  }

  int rank(const FqPoint& x, const FqField& f, std::vector<Elem>& buf) const {
    buf.assign(n * n, 0);
    for (int i = 0; i < n * n; ++i) {
      Elem v = 0;
      for (const auto& [l, c] : entries[i]) v = f.add(v, f.mul(c, x[l]));
      buf[i] = v;
    }
    return fq_rank(buf, n, n, f);
  }
};

void check_budget(const FqField& f, int vars, const CountOptions& opt) {
  if (std::pow(static_cast<double>(f.q()), vars) > opt.budget)
    throw Error(ErrorCode::BudgetExceeded, "enumeration of " + std::to_string(f.q()) + "^" + std::to_string(vars) +
                                               " points exceeds the budget");
}

// Calls visit(point, acc) for every point of F_q^N; the first coordinate is
// split across threads and the per-value accumulators are combined in order.
template <typename Acc, typename Visit>
Acc enumerate(const Graph& g, const FqField& f, const CountOptions& opt, Visit visit) {
  const int N = g.edge_count();
  const std::vector<int> labels = g.edges().to_vector();
  const int q = f.q();
  const int maxl = g.edges().max();
  std::vector<Acc> part(q);
  auto work = [&](int x0, int step) {
    FqPoint x(maxl + 1, 0);
    for (int v = x0; v < q; v += step) {
      Acc acc{};
      if (N == 0) {
        if (v == 0) visit(x, acc);
        part[v] = acc;
        continue;
      }
      x.assign(maxl + 1, 0);
      x[labels[0]] = static_cast<Elem>(v);
      // odometer over the remaining coordinates
      while (true) {
        visit(x, acc);
        int k = 1;
        while (k < N) {
          Elem& c = x[labels[k]];
          if (++c < q) break;
          c = 0;
          ++k;
        }
        if (k == N) break;
      }
      part[v] = acc;
    }
  };
  const int threads = std::max(1, opt.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (int t = 0; t < threads && t < q; ++t) jobs.push_back(std::async(std::launch::async, work, t, threads));
    for (auto& j : jobs) j.get();
  }
  Acc total{};
  for (const Acc& a : part) total += a;
  return total;
}

std::vector<MLPoly> jacobian_system(const Graph& g, EdgeSet which) {
  std::vector<MLPoly> polys{phi(g)};
  for (int e : which) polys.push_back(phi_minor(g, EdgeSet{e}, {}));
  return polys;
}

struct Triple {
  std::uint64_t singular = 0, disagree = 0;
  Triple& operator+=(const Triple& o) {
    singular += o.singular;
    disagree += o.disagree;
    return *this;
  }
};

}  // namespace

std::string sing_method_name(SingMethod m) {
  switch (m) {
    case SingMethod::Jacobian: return "jacobian";
    case SingMethod::JacobianTree: return "jacobian_tree";
    case SingMethod::Rank: return "rank";
  }
  return "?";
}

std::optional<SingMethod> sing_method_from_name(const std::string& name) {
  for (SingMethod m : {SingMethod::Jacobian, SingMethod::JacobianTree, SingMethod::Rank})
    if (sing_method_name(m) == name) return m;
  return std::nullopt;
}

EdgeSet lex_first_spanning_tree(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "no spanning tree in a disconnected graph");
  EdgeSet t;
  for (int e : g.edges())
    if (is_forest(g, t | EdgeSet{e})) t.insert(e);
  return t;
}

CountReport sing_count(const Graph& g, const FqField& f, SingMethod m, const CountOptions& opt) {
  const int N = g.edge_count();
  switch (m) {
    case SingMethod::Jacobian:
      return count_zeros(jacobian_system(g, g.edges()), f, N, opt);
    case SingMethod::JacobianTree:
      return count_zeros(jacobian_system(g, lex_first_spanning_tree(g)), f, N, opt);
    case SingMethod::Rank: {
      const LinearMatrix lm(p_matrix(g), f);
      check_budget(f, N, opt);
      const int bound = g.n() - 1;
      const auto total = enumerate<std::uint64_t>(g, f, opt, [&](const FqPoint& x, std::uint64_t& acc) {
        thread_local std::vector<Elem> buf;
        if (lm.rank(x, f, buf) < bound) ++acc;
      });
      return CountReport::from_raw(BigInt(total), f.q());
    }
  }
  throw Error(ErrorCode::BadParameter, "unknown method");
}

SingAgreement sing_pointwise(const Graph& g, const FqField& f, const CountOptions& opt) {
  const int N = g.edge_count();
  check_budget(f, N, opt);
  const LinearMatrix lm(p_matrix(g), f);
  const EdgeSet tree = lex_first_spanning_tree(g);
  const CompiledPoly ph(phi(g), f);
  std::vector<CompiledPoly> partial;
  std::vector<bool> in_tree;
  for (int e : g.edges()) {
    partial.emplace_back(phi_minor(g, EdgeSet{e}, {}), f);
    in_tree.push_back(tree.contains(e));
  }
  const int bound = g.n() - 1;
  const Triple t = enumerate<Triple>(g, f, opt, [&](const FqPoint& x, Triple& acc) {
    thread_local std::vector<Elem> buf;
    const bool zero = ph.eval(x, f) == 0;
    bool all = zero, along_tree = zero;
    for (std::size_t i = 0; i < partial.size() && (all || along_tree); ++i) {
      if (partial[i].eval(x, f) == 0) continue;
      all = false;
      if (in_tree[i]) along_tree = false;
    }
    const bool low_rank = lm.rank(x, f, buf) < bound;
    if (all && along_tree && low_rank) ++acc.singular;
    if (all != along_tree || all != low_rank) ++acc.disagree;
  });
  SingAgreement r;
  r.points = big_pow(f.q(), N);
  r.singular = t.singular;
  r.disagreements = t.disagree;
  return r;
}

}  // namespace c2lab
