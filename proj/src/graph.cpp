#include "c2lab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "c2lab/error.hpp"

namespace c2lab {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& endpoints)
    : vertex_count_(vertex_count) {
  int label = 1;
  for (auto [u, v] : endpoints) {
    edges_.push_back({u, v, label});
    edge_mask_.insert(label);
    ++label;
  }
  validate();
}

Graph Graph::with_labels(int vertex_count, std::vector<Edge> edges) {
  Graph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  for (const auto& e : g.edges_) {
    if (e.label < 1 || e.label > EdgeSet::kMaxLabel)
      throw Error(ErrorCode::BadIndices, "edge label out of range");
    if (g.edge_mask_.contains(e.label)) throw Error(ErrorCode::BadIndices, "duplicate edge label");
    g.edge_mask_.insert(e.label);
  }
  g.validate();
  return g;
}

void Graph::validate() const {
  if (vertex_count_ < 1) throw Error(ErrorCode::BadParameter, "a graph needs at least one vertex");
  if (edges_.size() > static_cast<std::size_t>(EdgeSet::kMaxLabel))
    throw Error(ErrorCode::BadParameter, "more than 64 edges");
  int prev = 0;
  for (const auto& e : edges_) {
    if (e.u < 1 || e.u > vertex_count_ || e.v < 1 || e.v > vertex_count_)
      throw Error(ErrorCode::BadParameter,
                  "edge " + std::to_string(e.label) + " references a vertex outside 1.." +
                      std::to_string(vertex_count_));
    if (e.label <= prev) throw Error(ErrorCode::BadIndices, "edge labels must be ascending");
    prev = e.label;
  }
}

int Graph::cycle_rank() const { return edge_count() - vertex_count_ + component_count(*this); }

const Edge& Graph::edge(int label) const {
  for (const auto& e : edges_)
    if (e.label == label) return e;
  throw Error(ErrorCode::BadIndices, "no edge with label " + std::to_string(label));
}

EdgeSet Graph::self_loops() const {
  EdgeSet s;
  for (const auto& e : edges_)
    if (e.is_self_loop()) s.insert(e.label);
  return s;
}

EdgeSet Graph::incident(int v) const {
  EdgeSet s;
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) s.insert(e.label);
  return s;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(vertex_count_ + 1, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

Graph delete_edges(const Graph& g, EdgeSet deleted) {
  if (!deleted.subset_of(g.edges()))
    throw Error(ErrorCode::BadIndices, "deleting edges " + (deleted - g.edges()).to_string() +
                                           " that are not in the graph");
  std::vector<Edge> kept;
  for (const auto& e : g.edge_list())
    if (!deleted.contains(e.label)) kept.push_back(e);
  return Graph::with_labels(g.vertex_count(), std::move(kept));
}

Graph contract_edges(const Graph& g, EdgeSet contracted) {
  if (!contracted.subset_of(g.edges()))
    throw Error(ErrorCode::BadIndices, "contracting edges " + (contracted - g.edges()).to_string() +
                                           " that are not in the graph");
  std::vector<Edge> edges = g.edge_list();
  int vertices = g.vertex_count();
  for (int label : contracted) {
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.label == label; });
    if (it->is_self_loop())
      throw Error(ErrorCode::SelfLoopContraction,
                  "edge " + std::to_string(label) + " is a self-loop when its turn to be contracted comes");
    const int keep = std::min(it->u, it->v);
    const int gone = std::max(it->u, it->v);
    edges.erase(it);
    for (auto& e : edges) {
      for (int* end : {&e.u, &e.v}) {
        if (*end == gone) *end = keep;
        else if (*end > gone) --*end;
      }
    }
    --vertices;
  }
  return Graph::with_labels(vertices, std::move(edges));
}

Graph subquotient(const Graph& g, EdgeSet deleted, EdgeSet contracted) {
  if (!deleted.disjoint(contracted))
    throw Error(ErrorCode::IndexOverlap, "deleted and contracted edge sets overlap");
  return contract_edges(delete_edges(g, deleted), contracted);
}

int component_count(const Graph& g) {
  UnionFind uf(g.vertex_count());
  int components = g.vertex_count();
  for (const auto& e : g.edge_list())
    if (uf.unite(e.u, e.v)) --components;
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_forest(const Graph& g, EdgeSet s) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edge_list())
    if (s.contains(e.label) && !uf.unite(e.u, e.v)) return false;
  return true;
}

bool is_spanning_tree(const Graph& g, EdgeSet t) {
  return t.subset_of(g.edges()) && t.size() == g.n() && is_forest(g, t);
}

std::vector<EdgeSet> spanning_trees(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "spanning trees of a disconnected graph");
  std::vector<EdgeSet> trees;
  const EdgeSet candidates = g.edges() - g.self_loops();
  for_each_subset_of_size(candidates, g.n(), [&](EdgeSet t) {
    if (is_forest(g, t)) trees.push_back(t);
  });
  return trees;
}

std::uint64_t spanning_tree_count(const Graph& g) { return spanning_trees(g).size(); }

bool girth_at_most(const Graph& g, int k) {
  if (k <= 0) return false;
  const auto& edges = g.edge_list();
  for (const auto& e : edges)
    if (e.is_self_loop()) return true;
  if (k == 1) return false;
  // Shortest cycle through edge e = 1 + shortest u-v path avoiding e.
  for (const auto& e : edges) {
    std::vector<int> dist(g.vertex_count() + 1, -1);
    std::vector<int> frontier{e.u};
    dist[e.u] = 0;
    for (int d = 0; d + 1 < k && !frontier.empty(); ++d) {
      std::vector<int> next;
      for (int x : frontier) {
        for (const auto& f : edges) {
          if (f.label == e.label) continue;
          int y = 0;
          if (f.u == x) y = f.v;
          else if (f.v == x) y = f.u;
          else continue;
          if (dist[y] < 0) {
            dist[y] = d + 1;
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    if (dist[e.v] >= 0 && dist[e.v] + 1 <= k) return true;
  }
  return false;
}

std::vector<EdgeSet> triangles(const Graph& g) {
  std::vector<EdgeSet> out;
  const auto& edges = g.edge_list();
  const std::size_t m = edges.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        const Edge* es[3] = {&edges[a], &edges[b], &edges[c]};
        bool loop = false;
        std::vector<int> vs;
        for (const Edge* e : es) {
          if (e->is_self_loop()) loop = true;
          vs.push_back(e->u);
          vs.push_back(e->v);
        }
        if (loop) continue;
        std::sort(vs.begin(), vs.end());
        // Three distinct vertices, each used exactly twice, and no two edges parallel.
        if (!(vs[0] == vs[1] && vs[2] == vs[3] && vs[4] == vs[5])) continue;
        if (vs[1] == vs[2] || vs[3] == vs[4]) continue;
        auto same = [](const Edge* x, const Edge* y) {
          return std::minmax(x->u, x->v) == std::minmax(y->u, y->v);
        };
        if (same(es[0], es[1]) || same(es[0], es[2]) || same(es[1], es[2])) continue;
        out.push_back(EdgeSet{edges[a].label, edges[b].label, edges[c].label});
      }
  return out;
}

std::vector<EdgeSet> cycles(const Graph& g) {
  std::vector<EdgeSet> out;
  const EdgeSet all = g.edges();
  if (all.size() > 24) throw Error(ErrorCode::BudgetExceeded, "cycle enumeration is limited to 24 edges");
  for_each_subset(all, [&](EdgeSet s) {
    if (s.empty()) return;
    std::vector<int> deg(g.vertex_count() + 1, 0);
    UnionFind uf(g.vertex_count());
    int touched_root = 0;
    for (int l : s) {
      const Edge& e = g.edge(l);
      ++deg[e.u];
      ++deg[e.v];
      uf.unite(e.u, e.v);
      touched_root = e.u;
    }
    for (int v = 1; v <= g.vertex_count(); ++v) {
      if (deg[v] == 0) continue;
      if (deg[v] != 2 || uf.find(v) != uf.find(touched_root)) return;
    }
    out.push_back(s);
  });
  return out;
}

namespace {

std::vector<std::pair<int, int>> canonical_edges(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edge_list()) {
    auto [a, b] = std::minmax(perm[e.u], perm[e.v]);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> ident(a.vertex_count() + 1);
  std::iota(ident.begin(), ident.end(), 0);
  const auto target = canonical_edges(b, ident);
  std::vector<int> perm = ident;
  do {
    if (canonical_edges(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

}  // namespace c2lab
