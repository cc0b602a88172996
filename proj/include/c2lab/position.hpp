#pragma once

#include <cstdint>
#include <vector>

#include "c2lab/count.hpp"
#include "c2lab/graph.hpp"

namespace c2lab {

/// Points x in F_q^{4n} (the highest vertex pinned to 0) grouped by the set
/// of edges whose quadric q_e(x) = (x_s^1-x_t^1)(x_s^2-x_t^2) +
/// (x_s^3-x_t^3)(x_s^4-x_t^4) vanishes. Bit k of a mask is edge_list()[k].
struct QuadricHistogram {
  int q = 0;
  int n = 0;  // free vertices
  std::vector<int> labels;
  std::vector<std::uint64_t> hist;  // size 2^N

  BigInt total() const;
  /// [q_1 ... q_N]: points where some quadric vanishes.
  BigInt union_count() const;
  /// [{q_i}_{i in I}]: common zeros of the quadrics of I.
  BigInt common_zeros(EdgeSet I) const;
  /// common_zeros for every mask at once (superset sums).
  std::vector<BigInt> all_common_zeros() const;
};

/// Reflected mixed-radix Gray code walk with incremental quadric updates.
QuadricHistogram quadric_histogram(const Graph& g, const FqField& f, const CountOptions& opt = {});
/// Plain odometer walk evaluating every quadric at every point (oracle).
QuadricHistogram quadric_histogram_direct(const Graph& g, const FqField& f, const CountOptions& opt = {});

CountReport quadric_union_count(const Graph& g, const FqField& f, const CountOptions& opt = {});

/// X_I = sum over alpha in F_q^I (other variables 0) of q^{2 corank P_G(alpha)},
/// the number of (alpha, x^2, x^4) with P x^2 = P x^4 = 0. `low_rank`
/// receives the number of alpha with rank < n - 1 when given.
BigInt corank_sum(const Graph& g, EdgeSet I, const FqField& f, const CountOptions& opt = {},
                  BigInt* low_rank = nullptr);

/// Right-hand side of the mod q^3 congruence for the quadric union:
/// (-q)^{2n-N}([phi] + q^2 [Sing] - q sum_i [phi_{G\i}] + q^2 sum_{i<j} [phi_{G\ij}])
/// mod q^3, each term counted in its own variables. Needs N <= 2n.
BigInt quadric_congruence_rhs(const Graph& g, const FqField& f, const CountOptions& opt = {});

}  // namespace c2lab
