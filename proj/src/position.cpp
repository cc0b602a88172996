#include "c2lab/position.hpp"

#include <cmath>
#include <future>

#include "c2lab/error.hpp"
#include "c2lab/graph_poly.hpp"
#include "c2lab/matform.hpp"
#include "c2lab/singular.hpp"

namespace c2lab {

namespace {

using Elem = FqField::Elem;

struct Setup {
  int n = 0, N = 0, dims = 0;
  std::vector<std::pair<int, int>> ends;        // 0-based free vertex or -1 when pinned; loops: (-2,-2)
  std::vector<std::vector<int>> incident;       // per free vertex: edge positions
};

Setup make_setup(const Graph& g, const FqField& f, const CountOptions& opt) {
  Setup s;
  s.n = g.vertex_count() - 1;
  s.N = g.edge_count();
  s.dims = 4 * s.n;
  if (s.N > 26) throw Error(ErrorCode::BadParameter, "too many edges for the zero-mask histogram");
  if (std::pow(static_cast<double>(f.q()), s.dims) > opt.budget)
    throw Error(ErrorCode::BudgetExceeded, "position space enumeration of " + std::to_string(f.q()) + "^" +
                                               std::to_string(s.dims) + " points exceeds the budget");
  s.incident.resize(s.n);
  const int pinned = g.vertex_count();
  for (int k = 0; k < s.N; ++k) {
    const Edge& e = g.edge_list()[k];
    if (e.is_self_loop()) {
      s.ends.emplace_back(-2, -2);
      continue;
    }
    const int a = e.u == pinned ? -1 : e.u - 1;
    const int b = e.v == pinned ? -1 : e.v - 1;
    s.ends.emplace_back(a, b);
    if (a >= 0) s.incident[a].push_back(k);
    if (b >= 0 && b != a) s.incident[b].push_back(k);
  }
  return s;
}

// x holds 4 components per free vertex: x[4v + c].
inline bool quadric_zero(const Setup& s, int k, const Elem* x, const FqField& f) {
  const auto [a, b] = s.ends[k];
  if (a == -2) return true;
  Elem d[4];
  for (int c = 0; c < 4; ++c) {
    const Elem xa = a >= 0 ? x[4 * a + c] : 0;
    const Elem xb = b >= 0 ? x[4 * b + c] : 0;
    d[c] = f.sub(xa, xb);
  }
  return f.add(f.mul(d[0], d[1]), f.mul(d[2], d[3])) == 0;
}

std::uint64_t full_mask(const Setup& s, const Elem* x, const FqField& f) {
  std::uint64_t m = 0;
  for (int k = 0; k < s.N; ++k)
    if (quadric_zero(s, k, x, f)) m |= std::uint64_t{1} << k;
  return m;
}

// Splits the first coordinate's values over threads; part v covers x_0 = v.
template <typename Walk>
QuadricHistogram run_parts(const Graph& g, const FqField& f, const CountOptions& opt, const Setup& s, Walk walk) {
  QuadricHistogram h;
  h.q = f.q();
  h.n = s.n;
  for (const Edge& e : g.edge_list()) h.labels.push_back(e.label);
  h.hist.assign(std::size_t{1} << s.N, 0);
  if (s.dims == 0) {
    std::vector<Elem> x;
    h.hist[full_mask(s, x.data(), f)] = 1;
    return h;
  }
  const int q = f.q();
  std::vector<std::vector<std::uint64_t>> parts(q);
  auto work = [&](int x0, int step) {
    for (int v = x0; v < q; v += step) {
      parts[v].assign(h.hist.size(), 0);
      walk(static_cast<Elem>(v), parts[v]);
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
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.size(); ++i) h.hist[i] += p[i];
  return h;
}

}  // namespace

BigInt QuadricHistogram::total() const {
  BigInt t = 0;
  for (std::uint64_t c : hist) t += c;
  return t;
}

BigInt QuadricHistogram::union_count() const { return total() - BigInt(hist.empty() ? 0 : hist[0]); }

BigInt QuadricHistogram::common_zeros(EdgeSet I) const {
  std::uint64_t want = 0;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (I.contains(labels[k])) want |= std::uint64_t{1} << k;
  BigInt t = 0;
  for (std::size_t m = 0; m < hist.size(); ++m)
    if ((m & want) == want) t += hist[m];
  return t;
}

std::vector<BigInt> QuadricHistogram::all_common_zeros() const {
  std::vector<BigInt> z(hist.begin(), hist.end());
  const std::size_t size = z.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t m = 0; m < size; ++m)
      if (!(m & bit)) z[m] += z[m | bit];
  return z;
}

QuadricHistogram quadric_histogram(const Graph& g, const FqField& f, const CountOptions& opt) {
  const Setup s = make_setup(g, f, opt);
  const int q = f.q();
  return run_parts(g, f, opt, s, [&](Elem first, std::vector<std::uint64_t>& hist) {
    std::vector<Elem> x(s.dims, 0);
    x[0] = first;
    std::uint64_t mask = full_mask(s, x.data(), f);
    // Knuth's Algorithm H on digits 1..dims-1, all of radix q
    const int m = s.dims - 1;
    std::vector<int> dir(m, 1), focus(m + 1);
    for (int j = 0; j <= m; ++j) focus[j] = j;
    while (true) {
      ++hist[mask];
      const int j = focus[0];
      focus[0] = 0;
      if (j == m) break;
      const int coord = j + 1;
      x[coord] = static_cast<Elem>(x[coord] + dir[j]);
      if (x[coord] == 0 || x[coord] == q - 1) {
        dir[j] = -dir[j];
        focus[j] = focus[j + 1];
        focus[j + 1] = j + 1;
      }
      for (int k : s.incident[coord / 4]) {
        const std::uint64_t bit = std::uint64_t{1} << k;
        if (quadric_zero(s, k, x.data(), f))
          mask |= bit;
        else
          mask &= ~bit;
      }
    }
  });
}

QuadricHistogram quadric_histogram_direct(const Graph& g, const FqField& f, const CountOptions& opt) {
  const Setup s = make_setup(g, f, opt);
  const int q = f.q();
  return run_parts(g, f, opt, s, [&](Elem first, std::vector<std::uint64_t>& hist) {
    std::vector<Elem> x(s.dims, 0);
    x[0] = first;
    while (true) {
      ++hist[full_mask(s, x.data(), f)];
      int k = 1;
      while (k < s.dims) {
        if (++x[k] < q) break;
        x[k] = 0;
        ++k;
      }
      if (k >= s.dims) break;
    }
  });
}

CountReport quadric_union_count(const Graph& g, const FqField& f, const CountOptions& opt) {
  return CountReport::from_raw(quadric_histogram(g, f, opt).union_count(), f.q());
}

BigInt corank_sum(const Graph& g, EdgeSet I, const FqField& f, const CountOptions& opt, BigInt* low_rank) {
  const PolyMatrix p = p_matrix(g);
  const int n = p.dim();
  const std::vector<int> vars = I.to_vector();
  if (std::pow(static_cast<double>(f.q()), static_cast<double>(vars.size())) > opt.budget)
    throw Error(ErrorCode::BudgetExceeded, "corank enumeration exceeds the budget");
  FqPoint x(g.edges().max() + 1, 0);
  std::vector<BigInt> by_corank(n + 1, 0);
  while (true) {
    ++by_corank[n - eval_rank(p, x, f)];
    std::size_t k = 0;
    while (k < vars.size()) {
      if (++x[vars[k]] < f.q()) break;
      x[vars[k]] = 0;
      ++k;
    }
    if (k == vars.size()) break;
  }
  BigInt total = 0;
  for (int c = 0; c <= n; ++c) total += by_corank[c] * big_pow(f.q(), 2 * c);
  if (low_rank) {
    *low_rank = 0;
    for (int c = 2; c <= n; ++c) *low_rank += by_corank[c];
  }
  return total;
}

BigInt quadric_congruence_rhs(const Graph& g, const FqField& f, const CountOptions& opt) {
  const int n = g.vertex_count() - 1;
  const int N = g.edge_count();
  if (N > 2 * n) throw Error(ErrorCode::PreconditionUnmet, "needs N <= 2n");
  const BigInt q = f.q();
  const BigInt q3 = q * q * q;
  BigInt inner = count_zeros(phi(g), f, opt).raw;
  inner += q * q * sing_count(g, f, SingMethod::Jacobian, opt).raw;
  const std::vector<int> edges = g.edges().to_vector();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    inner -= q * count_zeros(phi_minor(g, {}, EdgeSet{edges[a]}), f, opt).raw;
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      inner += q * q * count_zeros(phi_minor(g, {}, EdgeSet{edges[a], edges[b]}), f, opt).raw;
  }
  BigInt pref = big_pow(f.q(), static_cast<unsigned>(2 * n - N));
  if ((2 * n - N) % 2) pref = -pref;
  return mod_floor(pref * inner, q3);
}

}  // namespace c2lab
