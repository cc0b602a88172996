#include "c2lab/census.hpp"

#include <string>

#include "c2lab/error.hpp"

namespace c2lab {

BigInt multinomial(int n, int a, int b) {
  if (a < 0 || b < 0 || a + b > n) return 0;
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  for (int k : {a, b, n - a - b})
    for (int i = 2; i <= k; ++i) r /= i;
  return r;
}

CensusResult census(const Graph& g, int u, int v) {
  const int N = g.edge_count();
  CensusResult res;
  res.deleted = g.loop_number() - u;
  res.contracted = g.n() - v;
  if (u < 0 || v < 0 || u + v > N || res.deleted < 0 || res.contracted < 0 ||
      res.deleted + res.contracted > N)
    throw Error(ErrorCode::InvalidRange, "census range u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                                             " is empty for this graph");
  const EdgeSet all = g.edges();
  for_each_subset_of_size(all, res.deleted, [&](EdgeSet del) {
    const bool connected = is_connected(delete_edges(g, del));
    for_each_subset_of_size(all - del, res.contracted, [&](EdgeSet con) {
      ++res.r_bar;
      if (connected && is_forest(g, con)) ++res.r;
    });
  });
  return res;
}

}  // namespace c2lab
