#include "c2lab/dodgson.hpp"

#include <unordered_map>
#include <vector>

#include "c2lab/error.hpp"

namespace c2lab {

namespace {

// Matrix entry: 0, a constant, or a single variable.
struct Entry {
  int constant = 0;
  int variable = 0;  // label, 0 if constant
};

class MinorDet {
 public:
  MinorDet(std::vector<std::vector<Entry>> m, EdgeSet ambient) : m_(std::move(m)), ambient_(ambient) {}

  MLPoly run() { return expand(0); }

 private:
  MLPoly expand(std::uint64_t used) {
    const std::size_t row = std::popcount(used);
    if (row == m_.size()) return MLPoly::constant(1, ambient_);
    auto it = memo_.find(used);
    if (it != memo_.end()) return it->second;
    MLPoly acc(ambient_);
    int free_before = 0;
    for (std::size_t c = 0; c < m_.size(); ++c) {
      if ((used >> c) & 1u) continue;
      const Entry& e = m_[row][c];
      const int sign = (free_before % 2 == 0) ? 1 : -1;
      ++free_before;
      if (e.constant == 0 && e.variable == 0) continue;
      MLPoly sub = expand(used | (std::uint64_t{1} << c));
      if (sub.is_zero()) continue;
      if (e.variable != 0)
        acc += sign > 0 ? sub.times_variable(e.variable) : -sub.times_variable(e.variable);
      else
        acc += sub * BigInt(sign * e.constant);
    }
    memo_.emplace(used, acc);
    return acc;
  }

  std::vector<std::vector<Entry>> m_;
  EdgeSet ambient_;
  std::unordered_map<std::uint64_t, MLPoly> memo_;
};

}  // namespace

MLPoly dodgson(const Graph& g, EdgeSet rows, EdgeSet cols, EdgeSet zeroed) {
  if (rows.size() != cols.size()) throw Error(ErrorCode::BadIndices, "Dodgson index sets differ in size");
  if (!(rows | cols | zeroed).subset_of(g.edges()))
    throw Error(ErrorCode::BadIndices, "Dodgson index outside the edge set");
  const int n = g.n();
  const auto& edges = g.edge_list();
  const int N = static_cast<int>(edges.size());
  if (N + n > 64) throw Error(ErrorCode::BadParameter, "matrix M(G) too large");

  std::vector<int> row_ids;  // 0..N-1 edges, N..N+n-1 vertices
  std::vector<int> col_ids;
  for (int k = 0; k < N; ++k) {
    if (!rows.contains(edges[k].label)) row_ids.push_back(k);
    if (!cols.contains(edges[k].label)) col_ids.push_back(k);
  }
  for (int v = 0; v < n; ++v) {
    row_ids.push_back(N + v);
    col_ids.push_back(N + v);
  }
  auto incidence = [&](int k, int v) {  // v is 1-based
    const Edge& e = edges[k];
    if (e.is_self_loop()) return 0;
    if (v == std::min(e.u, e.v)) return 1;
    if (v == std::max(e.u, e.v)) return -1;
    return 0;
  };
  const std::size_t dim = row_ids.size();
  std::vector<std::vector<Entry>> m(dim, std::vector<Entry>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const int ri = row_ids[r];
      const int ci = col_ids[c];
      Entry& x = m[r][c];
      if (ri < N && ci < N) {
        if (ri == ci && !zeroed.contains(edges[ri].label)) x.variable = edges[ri].label;
      } else if (ri < N && ci >= N) {
        x.constant = incidence(ri, ci - N + 1);
      } else if (ri >= N && ci < N) {
        x.constant = -incidence(ci, ri - N + 1);
      }
    }
  }
  const EdgeSet ambient = g.edges() - rows - cols - zeroed;
  return MinorDet(std::move(m), ambient).run();
}

MLPoly dual_dodgson(const Graph& g, EdgeSet i, EdgeSet j, EdgeSet k, EdgeSet s) {
  const bool same = (i == j);
  if ((!same && !i.disjoint(j)) || !(i | j).disjoint(k) || !(i | j).disjoint(s) || !k.disjoint(s))
    throw Error(ErrorCode::IndexOverlap, "dual Dodgson index sets overlap");
  const EdgeSet ambient = g.edges() - (i | j | k | s);
  return cremona(dodgson(g, i | k, j | k, s), ambient);
}

MLPoly phi_sym(const Graph& g, EdgeSet a, EdgeSet b, EdgeSet lower) {
  const EdgeSet common = a & b;
  const EdgeSet i = a - common;
  const EdgeSet j = b - common;
  if (i.size() != j.size() || !(a | b).disjoint(lower)) return MLPoly(g.edges() - (a | b | lower));
  return dual_dodgson(g, i, j, lower, common);
}

}  // namespace c2lab
