#pragma once

#include <cstdint>

#include "c2lab/bigint.hpp"
#include "c2lab/graph.hpp"

namespace c2lab {

struct CensusResult {
  int deleted = 0;     // |I| = h_G - u
  int contracted = 0;  // |J| = n_G - v
  std::uint64_t r = 0;      // G\I//J connected and co-connected
  std::uint64_t r_bar = 0;  // all disjoint ordered pairs
};

/// Enumerates ordered pairs (I, J) of disjoint edge sets with |I| = h_G - u,
/// |J| = n_G - v. Throws InvalidRange.
CensusResult census(const Graph& g, int u, int v);

/// N! / (a! b! (N-a-b)!)
BigInt multinomial(int n, int a, int b);

}  // namespace c2lab
