#pragma once

#include <string>
#include <vector>

#include "c2lab/graph.hpp"

namespace c2lab {

/// banana, cycle, wheel, complete, Gn. Throws UnknownFamily, BadParameter.
Graph family(const std::string& name, int n);
/// "wheel:4" and the like.
Graph family_from_spec(const std::string& spec);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Fixed test corpus: family members plus a few hand-built graphs.
std::vector<NamedGraph> builtin_corpus();

/// Every connected multigraph (self-loops allowed) with 1..max_edges edges,
/// one representative per isomorphism class, in a deterministic order.
std::vector<Graph> connected_multigraphs(int max_edges, bool allow_self_loops = true);

}  // namespace c2lab
