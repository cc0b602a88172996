#pragma once

#include <vector>

#include "c2lab/field.hpp"
#include "c2lab/mlpoly.hpp"

namespace c2lab {

/// Field values indexed by edge label (index 0 unused).
using FqPoint = std::vector<FqField::Elem>;

/// Coefficients reduced into the prime field, monomials as bitmasks.
struct CompiledPoly {
  std::vector<std::pair<std::uint64_t, FqField::Elem>> terms;

  CompiledPoly() = default;
  CompiledPoly(const MLPoly& p, const FqField& f);
  FqField::Elem eval(const FqPoint& x, const FqField& f) const;
};

FqField::Elem evaluate(const MLPoly& p, const FqPoint& x, const FqField& f);

}  // namespace c2lab
