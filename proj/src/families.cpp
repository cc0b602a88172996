#include "c2lab/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

#include "c2lab/error.hpp"

namespace c2lab {

namespace {

void need(bool ok, const std::string& name, int n, const char* range) {
  if (!ok)
    throw Error(ErrorCode::BadParameter,
                "family " + name + " needs " + range + ", got " + std::to_string(n));
}

}  // namespace

Graph family(const std::string& name, int n) {
  std::vector<std::pair<int, int>> e;
  if (name == "banana") {
    need(n >= 1, name, n, "n >= 1");
    for (int i = 0; i < n; ++i) e.emplace_back(1, 2);
    return Graph(2, e);
  }
  if (name == "cycle") {
    need(n >= 1 && n <= 64, name, n, "1 <= n <= 64");
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n, 1);
    return Graph(n, e);
  }
  if (name == "wheel") {
    need(n >= 3 && n <= 32, name, n, "3 <= n <= 32");
    for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
    for (int i = 1; i <= n; ++i) e.emplace_back(i, n + 1);
    return Graph(n + 1, e);
  }
  if (name == "complete") {
    need(n >= 1 && n <= 11, name, n, "1 <= n <= 11");
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
  }
  if (name == "Gn") {
    need(n >= 2 && n <= 32, name, n, "2 <= n <= 32");
    for (int i = 0; i < 3; ++i) e.emplace_back(1, 2);
    for (int k = 2; k <= n - 1; ++k) {
      e.emplace_back(k, k + 1);
      e.emplace_back(k, k + 1);
    }
    e.emplace_back(n, n + 1);
    return Graph(n + 1, e);
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + name + "'");
}

Graph family_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::BadParameter, "family spec must look like name:n, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc() || ptr != arg.data() + arg.size())
    throw Error(ErrorCode::BadParameter, "bad family parameter '" + arg + "'");
  return family(name, n);
}

std::vector<NamedGraph> builtin_corpus() {
  std::vector<NamedGraph> c;
  auto add = [&](std::string name, Graph g) { c.push_back({std::move(name), std::move(g)}); };
  for (int k = 2; k <= 5; ++k) add("banana:" + std::to_string(k), family("banana", k));
  for (int k = 1; k <= 6; ++k) add("cycle:" + std::to_string(k), family("cycle", k));
  for (int k = 3; k <= 5; ++k) add("wheel:" + std::to_string(k), family("wheel", k));
  for (int k = 2; k <= 5; ++k) add("complete:" + std::to_string(k), family("complete", k));
  for (int k = 2; k <= 5; ++k) add("Gn:" + std::to_string(k), family("Gn", k));
  add("k4-minus-edge", Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  add("tadpole", Graph(2, {{1, 2}, {1, 2}, {2, 2}}));
  add("double-tadpole", Graph(1, {{1, 1}, {1, 1}}));
  add("triangle-pendant", Graph(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}}));
  add("theta-pendant", Graph(4, {{1, 2}, {1, 2}, {1, 2}, {2, 3}, {3, 4}}));
  add("triangle-doubled", Graph(3, {{1, 2}, {1, 2}, {2, 3}, {3, 1}}));
  add("k4-doubled-edge", Graph(4, {{1, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  add("prism", Graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}, {2, 5}, {3, 6}}));
  add("bipartite-k33", Graph(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}}));
  add("square-diagonal-loop", Graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {2, 2}}));
  add("path-3", Graph(4, {{1, 2}, {2, 3}, {3, 4}}));
  add("tree-example", Graph(7, {{1, 7}, {1, 2}, {2, 3}, {2, 4}, {1, 5}, {5, 6}, {3, 4}, {6, 7}}));
  // K_5 with edges {1,2} and {3,4} subdivided: non-planar, log-divergent (N = 12, n = 6).
  add("k5-subdivided", Graph(7, {{1, 6}, {6, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                 {3, 7}, {7, 4}, {3, 5}, {4, 5}}));
  return c;
}

namespace {

using EdgeMultiset = std::vector<std::pair<int, int>>;

EdgeMultiset relabel(const EdgeMultiset& edges, const std::vector<int>& perm) {
  EdgeMultiset out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) {
    auto [a, b] = std::minmax(perm[u], perm[v]);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimum relabeled edge list over vertex permutations that keep vertices
// sorted by (degree, loop count).
EdgeMultiset canonical(int vertices, const EdgeMultiset& edges) {
  std::vector<std::pair<int, int>> key(vertices + 1, {0, 0});
  for (auto [u, v] : edges) {
    ++key[u].first;
    ++key[v].first;
    if (u == v) ++key[u].second;
  }
  std::vector<int> order(vertices);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  // blocks of equal keys
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < vertices;) {
    int j = i;
    while (j < vertices && key[order[j]] == key[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  EdgeMultiset best;
  bool have = false;
  std::vector<int> perm(vertices + 1);
  // iterate over the product of permutations within blocks
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (int i = 0; i < vertices; ++i) perm[order[i]] = i + 1;
      auto cand = relabel(edges, perm);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

}  // namespace

std::vector<Graph> connected_multigraphs(int max_edges, bool allow_self_loops) {
  // Every connected graph arises from a smaller one by adding an edge between
  // existing vertices or a pendant edge to a new vertex.
  std::set<std::pair<int, EdgeMultiset>> level{{1, {}}};
  std::vector<Graph> out;
  for (int m = 1; m <= max_edges; ++m) {
    std::set<std::pair<int, EdgeMultiset>> next;
    for (const auto& [vertices, edges] : level) {
      for (int u = 1; u <= vertices; ++u) {
        for (int v = u; v <= vertices + 1; ++v) {
          if (u == v && !allow_self_loops) continue;
          const int nv = (v == vertices + 1) ? vertices + 1 : vertices;
          EdgeMultiset grown = edges;
          grown.emplace_back(u, v);
          next.emplace(nv, canonical(nv, grown));
        }
      }
    }
    for (const auto& [vertices, edges] : next) out.emplace_back(vertices, edges);
    level = std::move(next);
  }
  return out;
}

}  // namespace c2lab
