#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "c2lab/bigint.hpp"
#include "c2lab/field.hpp"
#include "c2lab/mlpoly.hpp"

namespace c2lab {

struct CountOptions {
  double budget = 1e8;  // enumerated points
  int threads = 1;
};

struct CountReport {
  BigInt raw;
  int q = 0;
  BigInt mod_q, mod_q2, mod_q3;
  std::optional<BigInt> quotient_c2;  // (raw / q^2) mod q when q^2 | raw

  static CountReport from_raw(const BigInt& raw, int q);
  /// Raw count and residues as decimal strings.
  nlohmann::json to_json() const;
};

/// Common zeros in F_q^n_vars of polynomials whose supports together use at
/// most n_vars variables; the others are free. Throws BudgetExceeded when
/// q^(variables in use) exceeds the budget, BadParameter when the supports
/// need more than n_vars variables.
CountReport count_zeros(const std::vector<MLPoly>& polys, const FqField& f, int n_vars,
                        const CountOptions& opt = {});
/// Same on the torus (all coordinates nonzero).
CountReport count_zeros_torus(const std::vector<MLPoly>& polys, const FqField& f, int n_vars,
                              const CountOptions& opt = {});

/// Counts in the polynomial's own ambient.
CountReport count_zeros(const MLPoly& p, const FqField& f, const CountOptions& opt = {});
CountReport count_zeros_torus(const MLPoly& p, const FqField& f, const CountOptions& opt = {});

/// Affine count rebuilt from torus counts of P_I (alpha_I = 0), grouped by
/// the set of vanishing coordinates.
BigInt count_by_zero_pattern(const MLPoly& p, const FqField& f, const CountOptions& opt = {});
/// Torus count plus the alternating sum of affine counts of P_I.
BigInt count_by_inclusion_exclusion(const MLPoly& p, const FqField& f, const CountOptions& opt = {});

/// True iff the count is divisible by q. Throws PreconditionUnmet unless the
/// degrees sum to less than n_vars.
bool chevalley_warning_check(const std::vector<MLPoly>& polys, const FqField& f, int n_vars,
                             const CountOptions& opt = {});

/// Point count of a single multilinear polynomial by recursive elimination:
/// a variable occurring in one member f = a x + b of the system S' + {f}
/// gives [S] = [S'] - [S', a] + q [S', a, b]; otherwise branch on the most
/// frequent variable. Memoized on a normalized system.
CountReport count_reduced(const MLPoly& p, const FqField& f, int n_vars);
CountReport count_reduced(const MLPoly& p, const FqField& f);
CountReport count_reduced(const std::vector<MLPoly>& polys, const FqField& f, int n_vars);

}  // namespace c2lab
