#include "c2lab/mlpoly.hpp"

#include <sstream>

#include "c2lab/error.hpp"

namespace c2lab {

MLPoly MLPoly::constant(const BigInt& c, EdgeSet ambient) {
  MLPoly p(ambient);
  p.add_term(EdgeSet{}, c);
  return p;
}

MLPoly MLPoly::variable(int label, EdgeSet ambient) {
  MLPoly p(ambient);
  p.add_term(EdgeSet{label}, 1);
  return p;
}

MLPoly MLPoly::monomial(EdgeSet vars, const BigInt& c, EdgeSet ambient) {
  MLPoly p(ambient);
  p.add_term(vars, c);
  return p;
}

void MLPoly::set_ambient(EdgeSet a) {
  if (!support().subset_of(a))
    throw Error(ErrorCode::BadIndices, "ambient " + a.to_string() + " misses variables of the polynomial");
  ambient_ = a;
}

EdgeSet MLPoly::support() const {
  EdgeSet s;
  for (const auto& [m, c] : terms_) s |= m;
  return s;
}

int MLPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

BigInt MLPoly::coeff(EdgeSet monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MLPoly::add_term(EdgeSet s, const BigInt& c) {
  if (c == 0) return;
  ambient_ |= s;
  auto [it, fresh] = terms_.emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MLPoly MLPoly::operator-() const {
  MLPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MLPoly& MLPoly::operator+=(const MLPoly& o) {
  ambient_ |= o.ambient_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MLPoly& MLPoly::operator-=(const MLPoly& o) {
  ambient_ |= o.ambient_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MLPoly& MLPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MLPoly MLPoly::times_disjoint(const MLPoly& o) const {
  if (!support().disjoint(o.support()))
    throw Error(ErrorCode::BadIndices, "product would not be multilinear");
  MLPoly r(ambient_ | o.ambient_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 | m2, c1 * c2);
  return r;
}

MLPoly MLPoly::times_variable(int k) const {
  MLPoly r(ambient_ | EdgeSet{k});
  for (const auto& [m, c] : terms_) {
    if (m.contains(k)) throw Error(ErrorCode::BadIndices, "variable already present");
    r.terms_.emplace(m | EdgeSet{k}, c);
  }
  return r;
}

MLPoly MLPoly::zero_vars(EdgeSet k) const {
  MLPoly r(ambient_ - k);
  for (const auto& [m, c] : terms_)
    if (m.disjoint(k)) r.terms_.emplace(m, c);
  return r;
}

std::string MLPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "") + c.str();
    for (int i : m) out += "*a" + std::to_string(i);
  }
  return out;
}

MLPoly MLPoly::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  MLPoly p;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "polynomial term '" + tok + "': " + why);
  };
  while (in >> tok) {
    if (tok == "0") continue;
    std::size_t pos = 0;
    const std::size_t star = tok.find('*');
    std::string coeff = tok.substr(0, star);
    if (coeff.empty() || coeff == "+" || coeff == "-") fail("missing coefficient");
    if (coeff[0] == '+') coeff.erase(0, 1);
    BigInt c;
    try {
      c = BigInt(coeff);
    } catch (const std::exception&) {
      fail("bad coefficient");
    }
    EdgeSet m;
    pos = star;
    while (pos != std::string::npos) {
      const std::size_t next = tok.find('*', pos + 1);
      const std::string var = tok.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
      if (var.size() < 2 || var[0] != 'a') fail("expected aK");
      int label = 0;
      try {
        label = std::stoi(var.substr(1));
      } catch (const std::exception&) {
        fail("bad variable index");
      }
      if (label < 1 || label > EdgeSet::kMaxLabel || m.contains(label)) fail("bad or repeated variable");
      m.insert(label);
      pos = next;
    }
    p.add_term(m, c);
  }
  return p;
}

nlohmann::json MLPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json coeff;
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      coeff = static_cast<std::int64_t>(c);
    else
      coeff = c.str();
    arr.push_back({coeff, m.to_vector()});
  }
  return arr;
}

MLPoly MLPoly::from_json(const nlohmann::json& j) {
  MLPoly p;
  try {
    for (const auto& t : j) {
      BigInt c = t.at(0).is_string() ? BigInt(t.at(0).get<std::string>()) : BigInt(t.at(0).get<std::int64_t>());
      p.add_term(EdgeSet::from_vector(t.at(1).get<std::vector<int>>()), c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return p;
}

MLPoly cremona(const MLPoly& p, EdgeSet ambient) {
  MLPoly r(ambient);
  for (const auto& [m, c] : p.terms()) {
    if (!m.subset_of(ambient))
      throw Error(ErrorCode::BadIndices, "monomial outside the Cremona ambient " + ambient.to_string());
    r.add_term(ambient - m, c);
  }
  return r;
}

std::pair<MLPoly, MLPoly> coeff_and_rest(const MLPoly& p, int k) {
  const EdgeSet rest_ambient = p.ambient() - EdgeSet{k};
  MLPoly upper(rest_ambient);
  MLPoly lower(rest_ambient);
  for (const auto& [m, c] : p.terms()) {
    if (m.contains(k))
      upper.add_term(m - EdgeSet{k}, c);
    else
      lower.add_term(m, c);
  }
  return {upper, lower};
}

Poly::Poly(const MLPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    Exponents e{};
    for (int i : m) e[i - 1] = 1;
    terms_.emplace(e, c);
  }
}

Poly Poly::constant(const BigInt& c) {
  Poly p;
  p.add_term(Exponents{}, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : b.terms_) {
      Poly::Exponents e;
      for (int i = 0; i < 64; ++i) {
        const int s = e1[i] + e2[i];
        if (s > 255) throw Error(ErrorCode::BadParameter, "exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Poly operator*(Poly a, const BigInt& c) {
  if (c == 0) return Poly{};
  for (auto& [e, v] : a.terms_) v *= c;
  return a;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "") + c.str();
    for (int i = 0; i < 64; ++i) {
      if (e[i] == 0) continue;
      out += "*a" + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

Poly resultant(const MLPoly& f, const MLPoly& g, int k) {
  auto [fu, fl] = coeff_and_rest(f, k);
  auto [gu, gl] = coeff_and_rest(g, k);
  return Poly(fu) * Poly(gl) - Poly(fl) * Poly(gu);
}

}  // namespace c2lab
