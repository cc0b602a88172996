#include "c2lab/count.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "c2lab/error.hpp"

namespace c2lab {

namespace {

using u128 = unsigned __int128;
using Elem = FqField::Elem;

BigInt to_big(u128 v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

u128 upow(u128 b, int e) {
  u128 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Dense coefficient tables over the variables in use, eliminated from the
// top variable down. Level m holds tables of size 2^m.
class DenseCounter {
 public:
  DenseCounter(const std::vector<MLPoly>& polys, const FqField& f, bool torus) : f_(f), torus_(torus) {
    EdgeSet vars;
    for (const MLPoly& p : polys) vars |= p.support();
    labels_ = vars.to_vector();
    m_ = static_cast<int>(labels_.size());
    std::vector<int> pos(65, -1);
    for (int i = 0; i < m_; ++i) pos[labels_[i]] = i;
    const BigInt pp = f.p();
    for (const MLPoly& p : polys) {
      std::vector<Elem> t(std::size_t{1} << m_, 0);
      for (const auto& [mono, c] : p.terms()) {
        std::size_t idx = 0;
        for (int l : mono) idx |= std::size_t{1} << pos[l];
        t[idx] = static_cast<Elem>(static_cast<int>(mod_floor(c, pp)));
      }
      tables_.push_back(std::move(t));
    }
    first_ = torus ? 1 : 0;
  }

  int vars_in_use() const { return m_; }

  u128 run(const CountOptions& opt) {
    std::vector<const Elem*> top;
    for (const auto& t : tables_) {
      const int kind = classify(t.data(), t.size());
      if (kind == 1) return 0;
      if (kind == 2) top.push_back(t.data());
    }
    if (top.empty() || m_ == 0) return upow(values(), m_);
    const int threads = std::max(1, opt.threads);
    const int q = f_.q();
    // split on the top variable; partial counts are summed in value order
    std::vector<u128> part(q, 0);
    auto work = [&](int x0, int step) {
      Scratch s(top.size(), m_);
      for (int x = x0; x < q; x += step) {
        if (x < first_) continue;
        part[x] = branch(top.data(), top.size(), m_, static_cast<Elem>(x), s);
      }
    };
    if (threads == 1) {
      work(0, 1);
    } else {
      std::vector<std::future<void>> jobs;
      for (int t = 0; t < threads && t < q; ++t) jobs.push_back(std::async(std::launch::async, work, t, threads));
      for (auto& j : jobs) j.get();
    }
    u128 total = 0;
    for (u128 v : part) total += v;
    return total;
  }

 private:
  struct Scratch {
    // buffers[level][poly] and pointers to the live ones
    std::vector<std::vector<std::vector<Elem>>> buffers;
    std::vector<std::vector<const Elem*>> live;
    Scratch(std::size_t polys, int m) : buffers(m + 1), live(m + 1, std::vector<const Elem*>(polys)) {
      for (int l = 0; l < m; ++l) buffers[l].assign(polys, std::vector<Elem>(std::size_t{1} << l));
    }
  };

  u128 values() const { return torus_ ? f_.q() - 1 : f_.q(); }

  // 0: identically zero, 1: nonzero constant, 2: otherwise
  static int classify(const Elem* t, std::size_t n) {
    for (std::size_t i = 1; i < n; ++i)
      if (t[i]) return 2;
    return t[0] ? 1 : 0;
  }

  // Sets the top variable of the level-m tables to x and counts the rest.
  u128 branch(const Elem* const* tabs, std::size_t count, int m, Elem x, Scratch& s) {
    const std::size_t half = std::size_t{1} << (m - 1);
    auto& out = s.buffers[m - 1];
    auto& ptrs = s.live[m - 1];
    std::size_t live = 0;
    for (std::size_t r = 0; r < count; ++r) {
      const Elem* t = tabs[r];
      Elem* o = out[live].data();
      bool nonconst = false;
      for (std::size_t i = 0; i < half; ++i) {
        const Elem v = f_.add(t[i], f_.mul(x, t[i + half]));
        o[i] = v;
        nonconst = nonconst || (i && v);
      }
      if (nonconst) {
        ptrs[live++] = o;
      } else if (o[0]) {
        return 0;
      }
    }
    if (live == 0) return upow(values(), m - 1);
    u128 total = 0;
    for (int y = first_; y < f_.q(); ++y) total += branch(ptrs.data(), live, m - 1, static_cast<Elem>(y), s);
    return total;
  }

  const FqField& f_;
  bool torus_;
  int first_ = 0;
  int m_ = 0;
  std::vector<int> labels_;
  std::vector<std::vector<Elem>> tables_;
};

CountReport count_impl(const std::vector<MLPoly>& polys, const FqField& f, int n_vars, const CountOptions& opt,
                       bool torus) {
  DenseCounter c(polys, f, torus);
  const int m = c.vars_in_use();
  if (m > n_vars) throw Error(ErrorCode::BadParameter, "polynomials use more variables than n_vars");
  if (std::pow(static_cast<double>(f.q()), m) > opt.budget)
    throw Error(ErrorCode::BudgetExceeded, "enumeration of " + std::to_string(f.q()) + "^" + std::to_string(m) +
                                               " points exceeds the budget");
  if (m > 40) throw Error(ErrorCode::BudgetExceeded, "too many variables for dense enumeration");
  const BigInt free = big_pow(torus ? f.q() - 1 : f.q(), static_cast<unsigned>(n_vars - m));
  return CountReport::from_raw(to_big(c.run(opt)) * free, f.q());
}

}  // namespace

CountReport CountReport::from_raw(const BigInt& raw, int q) {
  CountReport r;
  r.raw = raw;
  r.q = q;
  const BigInt bq = q;
  r.mod_q = mod_floor(raw, bq);
  r.mod_q2 = mod_floor(raw, bq * bq);
  r.mod_q3 = mod_floor(raw, bq * bq * bq);
  if (r.mod_q2 == 0) r.quotient_c2 = mod_floor(raw / (bq * bq), bq);
  return r;
}

nlohmann::json CountReport::to_json() const {
  nlohmann::json j;
  j["raw"] = to_decimal(raw);
  j["q"] = q;
  j["mod_q"] = to_decimal(mod_q);
  j["mod_q2"] = to_decimal(mod_q2);
  j["mod_q3"] = to_decimal(mod_q3);
  j["quotient_c2"] = quotient_c2 ? nlohmann::json(to_decimal(*quotient_c2)) : nlohmann::json(nullptr);
  return j;
}

CountReport count_zeros(const std::vector<MLPoly>& polys, const FqField& f, int n_vars, const CountOptions& opt) {
  return count_impl(polys, f, n_vars, opt, false);
}

CountReport count_zeros_torus(const std::vector<MLPoly>& polys, const FqField& f, int n_vars,
                              const CountOptions& opt) {
  return count_impl(polys, f, n_vars, opt, true);
}

CountReport count_zeros(const MLPoly& p, const FqField& f, const CountOptions& opt) {
  return count_zeros(std::vector<MLPoly>{p}, f, p.ambient().size(), opt);
}

CountReport count_zeros_torus(const MLPoly& p, const FqField& f, const CountOptions& opt) {
  return count_zeros_torus(std::vector<MLPoly>{p}, f, p.ambient().size(), opt);
}

BigInt count_by_zero_pattern(const MLPoly& p, const FqField& f, const CountOptions& opt) {
  BigInt total = 0;
  for_each_subset(p.ambient(), [&](EdgeSet zeroed) { total += count_zeros_torus(p.zero_vars(zeroed), f, opt).raw; });
  return total;
}

BigInt count_by_inclusion_exclusion(const MLPoly& p, const FqField& f, const CountOptions& opt) {
  BigInt total = count_zeros_torus(p, f, opt).raw;
  for_each_subset(p.ambient(), [&](EdgeSet zeroed) {
    if (zeroed.empty()) return;
    const BigInt c = count_zeros(p.zero_vars(zeroed), f, opt).raw;
    if (zeroed.size() % 2 == 1)
      total += c;
    else
      total -= c;
  });
  return total;
}

bool chevalley_warning_check(const std::vector<MLPoly>& polys, const FqField& f, int n_vars,
                             const CountOptions& opt) {
  int deg = 0;
  for (const MLPoly& p : polys) deg += std::max(p.degree(), 0);
  if (deg >= n_vars)
    throw Error(ErrorCode::PreconditionUnmet, "degrees sum to " + std::to_string(deg) + ", not below " +
                                                  std::to_string(n_vars) + " variables");
  return count_zeros(polys, f, n_vars, opt).mod_q == 0;
}

}  // namespace c2lab
