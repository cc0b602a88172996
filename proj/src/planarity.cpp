#include "c2lab/planarity.hpp"

#include <map>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "c2lab/error.hpp"

namespace c2lab {

namespace {

using SimpleGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                          boost::property<boost::edge_index_t, int>>;
using SimpleEdge = boost::graph_traits<SimpleGraph>::edge_descriptor;

struct Reduction {
  SimpleGraph simple;
  // Parallel class of each simple edge (positions into edge_list(), ascending).
  std::vector<std::vector<int>> classes;
  std::vector<std::pair<int, int>> ends;  // 0-based, first < second
};

Reduction reduce(const Graph& g) {
  Reduction r{SimpleGraph(g.vertex_count()), {}, {}};
  std::map<std::pair<int, int>, int> index;
  const auto& edges = g.edge_list();
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    const Edge& e = edges[k];
    if (e.is_self_loop()) continue;
    const std::pair<int, int> key = std::minmax(e.u - 1, e.v - 1);
    auto [it, fresh] = index.emplace(key, static_cast<int>(r.classes.size()));
    if (fresh) {
      r.classes.emplace_back();
      r.ends.push_back(key);
      boost::add_edge(key.first, key.second, it->second, r.simple);
    }
    r.classes[it->second].push_back(k);
  }
  return r;
}

bool simple_embedding(const Reduction& r, std::vector<std::vector<SimpleEdge>>* out) {
  const auto n = boost::num_vertices(r.simple);
  std::vector<std::vector<SimpleEdge>> emb(n);
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = r.simple,
      boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
          emb.begin(), boost::get(boost::vertex_index, r.simple)));
  if (planar && out) *out = std::move(emb);
  return planar;
}

int dart_at(const Graph& g, int pos, int vertex) {
  const Edge& e = g.edge_list()[pos];
  return e.u == vertex ? 2 * pos : 2 * pos + 1;
}

}  // namespace

bool is_planar(const Graph& g) { return simple_embedding(reduce(g), nullptr); }

Embedding planar_embedding(const Graph& g) {
  const Reduction r = reduce(g);
  std::vector<std::vector<SimpleEdge>> simple;
  if (!simple_embedding(r, &simple)) throw Error(ErrorCode::NotPlanar, "graph is not planar");

  Embedding emb;
  emb.rotation.assign(g.vertex_count() + 1, {});
  const auto& edges = g.edge_list();
  for (int v = 1; v <= g.vertex_count(); ++v) {
    auto& rot = emb.rotation[v];
    // Self-loops first, each as two consecutive darts so it bounds its own face.
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
      if (edges[k].is_self_loop() && edges[k].u == v) {
        rot.push_back(2 * k);
        rot.push_back(2 * k + 1);
      }
    }
    for (const SimpleEdge& se : simple[v - 1]) {
      const int cls = boost::get(boost::edge_index, r.simple, se);
      const auto& members = r.classes[cls];
      const bool low_end = r.ends[cls].first == v - 1;
      // Reversed order at the other endpoint makes consecutive parallels bound digons.
      if (low_end) {
        for (int pos : members) rot.push_back(dart_at(g, pos, v));
      } else {
        for (auto it = members.rbegin(); it != members.rend(); ++it) rot.push_back(dart_at(g, *it, v));
      }
    }
  }

  // successor of each dart in the rotation of its own vertex
  std::vector<int> next(2 * edges.size(), -1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const auto& rot = emb.rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) next[rot[i]] = rot[(i + 1) % rot.size()];
  }
  std::vector<bool> seen(2 * edges.size(), false);
  for (int d = 0; d < static_cast<int>(next.size()); ++d) {
    if (seen[d]) continue;
    std::vector<int> face;
    for (int x = d; !seen[x]; x = next[x ^ 1]) {
      seen[x] = true;
      face.push_back(x);
    }
    emb.faces.push_back(std::move(face));
  }

  // Euler per component: V - E + F = 2, an isolated vertex contributes 1.
  int isolated = 0;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (emb.rotation[v].empty()) ++isolated;
  const int c = component_count(g);
  const int lhs = g.vertex_count() - g.edge_count() + static_cast<int>(emb.faces.size());
  if (lhs != 2 * (c - isolated) + isolated)
    throw std::logic_error("rotation system violates Euler's formula");
  return emb;
}

Graph planar_dual(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "planar dual needs a connected graph");
  const Embedding emb = planar_embedding(g);
  std::vector<int> face_of(2 * g.edge_count(), -1);
  for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f)
    for (int d : emb.faces[f]) face_of[d] = f + 1;
  std::vector<Edge> dual;
  const auto& edges = g.edge_list();
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    auto [a, b] = std::minmax(face_of[2 * k], face_of[2 * k + 1]);
    dual.push_back({a, b, edges[k].label});
  }
  return Graph::with_labels(std::max<int>(1, static_cast<int>(emb.faces.size())), std::move(dual));
}

}  // namespace c2lab
