#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "c2lab/bigint.hpp"
#include "c2lab/edge_set.hpp"

namespace c2lab {

/// Integer polynomial that is linear in every variable. A monomial is the set
/// of its variables. The ambient set names the variables the polynomial is
/// considered to live in (it matters for the Cremona map and for point
/// counts); equality ignores it.
class MLPoly {
 public:
  using Terms = std::map<EdgeSet, BigInt>;

  MLPoly() = default;
  explicit MLPoly(EdgeSet ambient) : ambient_(ambient) {}

  static MLPoly constant(const BigInt& c, EdgeSet ambient = {});
  static MLPoly variable(int label, EdgeSet ambient = {});
  static MLPoly monomial(EdgeSet vars, const BigInt& c, EdgeSet ambient = {});

  const Terms& terms() const { return terms_; }
  EdgeSet ambient() const { return ambient_; }
  void set_ambient(EdgeSet a);  // must contain support()
  /// Union of all monomials.
  EdgeSet support() const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const;  // -1 for the zero polynomial
  BigInt coeff(EdgeSet monomial) const;

  /// Adds c * prod_{i in s} alpha_i; widens the ambient if needed.
  void add_term(EdgeSet s, const BigInt& c);

  MLPoly operator-() const;
  MLPoly& operator+=(const MLPoly& o);
  MLPoly& operator-=(const MLPoly& o);
  MLPoly& operator*=(const BigInt& c);
  friend MLPoly operator+(MLPoly a, const MLPoly& b) { return a += b; }
  friend MLPoly operator-(MLPoly a, const MLPoly& b) { return a -= b; }
  friend MLPoly operator*(MLPoly a, const BigInt& c) { return a *= c; }

  /// Product with a polynomial in disjoint variables (stays multilinear).
  /// Throws BadIndices when the supports meet.
  MLPoly times_disjoint(const MLPoly& o) const;
  /// alpha_k * P; P must not involve alpha_k.
  MLPoly times_variable(int k) const;

  /// alpha_t = 0 for t in k; the ambient shrinks accordingly.
  MLPoly zero_vars(EdgeSet k) const;

  bool operator==(const MLPoly& o) const { return terms_ == o.terms_; }

  /// "+1*a1*a2 +1*a3"; monomials by ascending bitmask, "0" for zero.
  std::string to_string() const;
  static MLPoly parse(const std::string& text);
  /// [[coefficient, [indices]], ...]; coefficients beyond 64 bits as strings.
  nlohmann::json to_json() const;
  static MLPoly from_json(const nlohmann::json& j);

 private:
  Terms terms_;
  EdgeSet ambient_;
};

/// Monomial -> ambient \ monomial, coefficients kept.
MLPoly cremona(const MLPoly& p, EdgeSet ambient);

/// P = P^k alpha_k + P_k; both parts live in ambient \ {k}.
std::pair<MLPoly, MLPoly> coeff_and_rest(const MLPoly& p, int k);

/// General integer polynomial in alpha_1..alpha_64, used where products of
/// multilinear polynomials appear.
class Poly {
 public:
  using Exponents = std::array<std::uint8_t, 64>;
  using Terms = std::map<Exponents, BigInt>;

  Poly() = default;
  Poly(const MLPoly& p);  // NOLINT: implicit on purpose
  static Poly constant(const BigInt& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  void add_term(const Exponents& e, const BigInt& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigInt& c);

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  std::string to_string() const;  // "+2*a1^2*a3 -1"

 private:
  Terms terms_;
};

/// [f, g]_k = f^k g_k - f_k g^k
Poly resultant(const MLPoly& f, const MLPoly& g, int k);

}  // namespace c2lab
