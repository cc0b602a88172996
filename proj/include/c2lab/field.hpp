#pragma once

#include <cstdint>
#include <vector>

namespace c2lab {

/// F_q by lookup tables. Element codes are 0..q-1; code c stands for the
/// polynomial sum_i d_i x^i where d_i are the base-p digits of c, so codes
/// 0..p-1 are the prime field and 0, 1 are the neutral elements.
class FqField {
 public:
  using Elem = std::uint8_t;

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return s_; }
  /// Coefficients c_0..c_s of the defining monic polynomial (c_s = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem inv(Elem a) const { return inv_[a]; }  // inv(0) = 0
  /// Image of an integer in the prime field.
  Elem from_int(long long v) const;

  friend FqField make_field(int q);
  friend FqField make_field(int q, const std::vector<int>& modulus);

 private:
  int q_ = 0, p_ = 0, s_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

/// Prime powers q < 256. Non-prime q use the monic irreducible of degree s
/// whose coefficient code sum c_i p^i is smallest. Throws UnsupportedQ.
FqField make_field(int q);
/// Same with an explicit monic irreducible modulus c_0..c_s. Throws
/// UnsupportedQ when it is not irreducible of the right degree.
FqField make_field(int q, const std::vector<int>& modulus);

/// (p, s) with q = p^s, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power(int q);

}  // namespace c2lab
