#include "c2lab/fq_eval.hpp"

#include <bit>

namespace c2lab {

CompiledPoly::CompiledPoly(const MLPoly& p, const FqField& f) {
  const BigInt pp = f.p();
  for (const auto& [m, c] : p.terms()) {
    const BigInt r = mod_floor(c, pp);
    if (r != 0) terms.emplace_back(m.bits(), static_cast<FqField::Elem>(static_cast<int>(r)));
  }
}

FqField::Elem CompiledPoly::eval(const FqPoint& x, const FqField& f) const {
  FqField::Elem acc = 0;
  for (const auto& [m, c] : terms) {
    FqField::Elem v = c;
    for (std::uint64_t r = m; r && v; r &= r - 1) v = f.mul(v, x[std::countr_zero(r) + 1]);
    acc = f.add(acc, v);
  }
  return acc;
}

FqField::Elem evaluate(const MLPoly& p, const FqPoint& x, const FqField& f) {
  return CompiledPoly(p, f).eval(x, f);
}

}  // namespace c2lab
