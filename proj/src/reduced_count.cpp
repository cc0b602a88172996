#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "c2lab/count.hpp"
#include "c2lab/error.hpp"

namespace c2lab {

namespace {

using u128 = unsigned __int128;
using Elem = FqField::Elem;

// Polynomial over F_q: (monomial bitmask, nonzero coefficient), sorted by mask.
using FPoly = std::vector<std::pair<std::uint64_t, Elem>>;
using System = std::vector<FPoly>;

BigInt to_big(u128 v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

class Reducer {
 public:
  explicit Reducer(const FqField& f) : f_(f) {}

  // Zeros of `s` in F_q^k.
  u128 count(System s, int k) {
    int m = 0;
    if (!normalize(s, m)) return 0;
    return pow(k - m) * count_normal(s, m);
  }

 private:
  u128 pow(int e) const {
    u128 r = 1;
    while (e-- > 0) r *= static_cast<u128>(f_.q());
    return r;
  }

  static void add_term(std::map<std::uint64_t, Elem>& acc, std::uint64_t m, Elem c, const FqField& f) {
    Elem& slot = acc[m];
    slot = f.add(slot, c);
  }

  static FPoly from_map(const std::map<std::uint64_t, Elem>& acc) {
    FPoly p;
    for (const auto& [m, c] : acc)
      if (c) p.emplace_back(m, c);
    return p;
  }

  // Drops zero members, scales each to a monic lowest term, compresses the
  // variables in use to bits 0..m-1 and sorts. False when a member is a
  // nonzero constant (no zeros).
  bool normalize(System& s, int& m) {
    System out;
    std::uint64_t used = 0;
    for (FPoly& p : s) {
      if (p.empty()) continue;
      if (p.size() == 1 && p[0].first == 0) return false;
      const Elem inv = f_.inv(p[0].second);
      for (auto& [mono, c] : p) {
        c = f_.mul(c, inv);
        used |= mono;
      }
      out.push_back(std::move(p));
    }
    m = std::popcount(used);
    if (used != (std::uint64_t{1} << m) - 1) {
      for (FPoly& p : out) {
        for (auto& [mono, c] : p) {
          std::uint64_t packed = 0;
          int bit = 0;
          for (std::uint64_t r = used; r; r &= r - 1, ++bit)
            if (mono & (r & (~r + 1))) packed |= std::uint64_t{1} << bit;
          mono = packed;
        }
        std::sort(p.begin(), p.end());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    s = std::move(out);
    return true;
  }

  // All m variables occur in s.
  u128 count_normal(const System& s, int m) {
    if (s.empty()) return pow(m);
    auto key = std::make_pair(m, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // occurrences per variable: members and monomials
    std::vector<int> members(m, 0), monomials(m, 0);
    for (const FPoly& p : s) {
      std::uint64_t in = 0;
      for (const auto& [mono, c] : p) {
        in |= mono;
        for (std::uint64_t r = mono; r; r &= r - 1) ++monomials[std::countr_zero(r)];
      }
      for (std::uint64_t r = in; r; r &= r - 1) ++members[std::countr_zero(r)];
    }
    int lone = -1, busiest = 0;
    for (int v = 0; v < m; ++v) {
      if (members[v] == 1 && (lone < 0 || monomials[v] > monomials[lone])) lone = v;
      if (monomials[v] > monomials[busiest]) busiest = v;
    }

    u128 result = 0;
    if (lone >= 0) {
      const std::uint64_t bit = std::uint64_t{1} << lone;
      System rest;
      FPoly a, b;
      for (const FPoly& p : s) {
        bool has = false;
        for (const auto& [mono, c] : p) has = has || (mono & bit);
        if (!has) {
          rest.push_back(p);
          continue;
        }
        for (const auto& [mono, c] : p) (mono & bit ? a : b).emplace_back(mono & ~bit, c);
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      // [S', f] = [S'] - [S', a] + q [S', a, b], counted in m-1 variables
      System with_a = rest;
      with_a.push_back(a);
      System with_ab = with_a;
      with_ab.push_back(b);
      result = count(rest, m - 1) - count(with_a, m - 1) + static_cast<u128>(f_.q()) * count(with_ab, m - 1);
    } else {
      const std::uint64_t bit = std::uint64_t{1} << busiest;
      for (int x = 0; x < f_.q(); ++x) {
        System sub;
        for (const FPoly& p : s) {
          std::map<std::uint64_t, Elem> acc;
          for (const auto& [mono, c] : p) {
            if (mono & bit)
              add_term(acc, mono & ~bit, f_.mul(c, static_cast<Elem>(x)), f_);
            else
              add_term(acc, mono, c, f_);
          }
          sub.push_back(from_map(acc));
        }
        result += count(sub, m - 1);
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  const FqField& f_;
  std::map<std::pair<int, System>, u128> memo_;
};

}  // namespace

CountReport count_reduced(const std::vector<MLPoly>& polys, const FqField& f, int n_vars) {
  EdgeSet vars;
  for (const MLPoly& p : polys) vars |= p.support();
  if (vars.size() > n_vars) throw Error(ErrorCode::BadParameter, "polynomials use more variables than n_vars");
  if (n_vars * std::log2(static_cast<double>(f.q())) > 120)
    throw Error(ErrorCode::BadParameter, "count would not fit the 128-bit accumulator");
  const std::vector<int> labels = vars.to_vector();
  const BigInt pp = f.p();
  System s;
  for (const MLPoly& p : polys) {
    std::map<std::uint64_t, Elem> acc;
    for (const auto& [mono, c] : p.terms()) {
      std::uint64_t packed = 0;
      for (int l : mono)
        packed |= std::uint64_t{1} << (std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
      const Elem e = static_cast<Elem>(static_cast<int>(mod_floor(c, pp)));
      if (e) acc[packed] = e;
    }
    FPoly fp;
    for (const auto& [m, c] : acc) fp.emplace_back(m, c);
    s.push_back(std::move(fp));
  }
  Reducer r(f);
  return CountReport::from_raw(to_big(r.count(std::move(s), n_vars)), f.q());
}

CountReport count_reduced(const MLPoly& p, const FqField& f, int n_vars) {
  return count_reduced(std::vector<MLPoly>{p}, f, n_vars);
}

CountReport count_reduced(const MLPoly& p, const FqField& f) { return count_reduced(p, f, p.ambient().size()); }

}  // namespace c2lab
