#include "c2lab/field.hpp"

#include "c2lab/error.hpp"

namespace c2lab {

namespace {

// Polynomials over F_p as digit vectors, lowest degree first.
using Digits = std::vector<int>;

Digits digits_of(int code, int p, int s) {
  Digits d(s);
  for (int i = 0; i < s; ++i, code /= p) d[i] = code % p;
  return d;
}

int code_of(const Digits& d, int p) {
  int c = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) c = c * p + d[i];
  return c;
}

// a * b mod modulus (monic, degree s)
Digits mul_mod(const Digits& a, const Digits& b, const Digits& modulus, int p) {
  const int s = static_cast<int>(modulus.size()) - 1;
  Digits prod(2 * s, 0);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int k = 2 * s - 1; k >= s; --k) {
    const int c = prod[k];
    if (c == 0) continue;
    for (int i = 0; i <= s; ++i) prod[k - s + i] = ((prod[k - s + i] - c * modulus[i]) % p + p) % p;
  }
  prod.resize(s);
  return prod;
}

// No roots is enough for s <= 3; in general test for a nontrivial monic factor
// of degree <= s/2 by trial division.
bool irreducible(const Digits& f, int p) {
  const int s = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= s / 2; ++d) {
    int total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (int code = 0; code < total; ++code) {
      Digits g = digits_of(code, p, d);
      g.push_back(1);
      Digits r = f;  // remainder of f mod g
      for (int k = s; k >= d; --k) {
        const int c = r[k];
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - c * g[i]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  int s = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++s;
  }
  return r == 1 ? std::pair{p, s} : std::pair{0, 0};
}

FqField make_field(int q, const std::vector<int>& modulus) {
  const auto [p, s] = prime_power(q);
  if (p == 0 || q >= 256) throw Error(ErrorCode::UnsupportedQ, "unsupported field size " + std::to_string(q));
  if (static_cast<int>(modulus.size()) != s + 1 || modulus.back() != 1)
    throw Error(ErrorCode::UnsupportedQ, "modulus must be monic of degree " + std::to_string(s));
  for (int c : modulus)
    if (c < 0 || c >= p) throw Error(ErrorCode::UnsupportedQ, "modulus coefficient out of range");
  if (s > 1 && !irreducible(modulus, p)) throw Error(ErrorCode::UnsupportedQ, "modulus is reducible");

  FqField f;
  f.q_ = q;
  f.p_ = p;
  f.s_ = s;
  f.modulus_ = modulus;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  std::vector<Digits> d(q);
  for (int a = 0; a < q; ++a) d[a] = digits_of(a, p, s);
  for (int a = 0; a < q; ++a) {
    Digits n(s);
    for (int i = 0; i < s; ++i) n[i] = (p - d[a][i]) % p;
    f.neg_[a] = static_cast<FqField::Elem>(code_of(n, p));
    for (int b = 0; b < q; ++b) {
      Digits sum(s);
      for (int i = 0; i < s; ++i) sum[i] = (d[a][i] + d[b][i]) % p;
      f.add_[a * q + b] = static_cast<FqField::Elem>(code_of(sum, p));
      f.mul_[a * q + b] = static_cast<FqField::Elem>(code_of(mul_mod(d[a], d[b], modulus, p), p));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<FqField::Elem>(b);
  return f;
}

FqField make_field(int q) {
  const auto [p, s] = prime_power(q);
  if (p == 0 || q >= 256) throw Error(ErrorCode::UnsupportedQ, "unsupported field size " + std::to_string(q));
  if (s == 1) return make_field(q, {0, 1});
  for (int code = 0; code < q; ++code) {
    Digits m = digits_of(code, p, s);
    m.push_back(1);
    if (irreducible(m, p)) return make_field(q, m);
  }
  throw Error(ErrorCode::UnsupportedQ, "no irreducible polynomial found");
}

FqField::Elem FqField::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

}  // namespace c2lab
