#include "c2lab/matform.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#include "c2lab/error.hpp"

namespace c2lab {

PolyMatrix::PolyMatrix(int dim, EdgeSet ambient) : dim_(dim), a_(dim * dim, MLPoly(ambient)) {}

bool PolyMatrix::symmetric() const {
  for (int r = 1; r <= dim_; ++r)
    for (int c = r + 1; c <= dim_; ++c)
      if (!(at(r, c) == at(c, r))) return false;
  return true;
}

void PolyMatrix::apply(const RowColOp& op) {
  if (op.source < 1 || op.source > dim_ || op.target < 1 || op.target > dim_ || op.source == op.target)
    throw Error(ErrorCode::BadIndices, "row/column operation out of range");
  for (int c = 1; c <= dim_; ++c) at(op.target, c) += at(op.source, c);
  for (int r = 1; r <= dim_; ++r) at(r, op.target) += at(r, op.source);
}

PolyMatrix PolyMatrix::permuted(const std::vector<int>& order) const {
  PolyMatrix out(dim_);
  for (int r = 1; r <= dim_; ++r)
    for (int c = 1; c <= dim_; ++c) out.at(r, c) = at(order[r - 1], order[c - 1]);
  return out;
}

PolyMatrix PolyMatrix::zero_vars(EdgeSet k) const {
  PolyMatrix out = *this;
  for (MLPoly& p : out.a_) p = p.zero_vars(k);
  return out;
}

Poly PolyMatrix::determinant() const {
  if (dim_ == 0) return Poly::constant(1);
  if (dim_ > 30) throw Error(ErrorCode::BadParameter, "matrix too large for cofactor expansion");
  std::vector<Poly> entries(a_.begin(), a_.end());
  std::unordered_map<std::uint32_t, Poly> memo;
  std::function<Poly(std::uint32_t)> expand = [&](std::uint32_t used) -> Poly {
    const int row = std::popcount(used);
    if (row == dim_) return Poly::constant(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Poly acc;
    int free_before = 0;
    for (int c = 0; c < dim_; ++c) {
      if ((used >> c) & 1u) continue;
      const Poly& e = entries[row * dim_ + c];
      const bool odd = free_before++ % 2 != 0;
      if (e.is_zero()) continue;
      const Poly sub = expand(used | (1u << c));
      if (sub.is_zero()) continue;
      if (odd)
        acc -= e * sub;
      else
        acc += e * sub;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return expand(0);
}

std::vector<std::pair<int, int>> PolyMatrix::occurrences(int e) const {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= dim_; ++r)
    for (int c = 1; c <= dim_; ++c)
      if (at(r, c).support().contains(e)) out.emplace_back(r, c);
  return out;
}

nlohmann::json PolyMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 1; r <= dim_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 1; c <= dim_; ++c) row.push_back(at(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string PolyMatrix::to_string() const {
  std::string s;
  for (int r = 1; r <= dim_; ++r) {
    for (int c = 1; c <= dim_; ++c) {
      if (c > 1) s += " | ";
      s += at(r, c).to_string();
    }
    s += '\n';
  }
  return s;
}

PolyMatrix p_matrix(const Graph& g, int removed) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "P_G needs a connected graph");
  const int vcount = g.vertex_count();
  if (removed == 0) removed = vcount;
  if (removed < 1 || removed > vcount) throw Error(ErrorCode::BadParameter, "removed vertex out of range");
  auto row = [&](int v) { return v < removed ? v : (v == removed ? 0 : v - 1); };
  PolyMatrix m(vcount - 1, g.edges());
  for (const Edge& e : g.edge_list()) {
    if (e.is_self_loop()) continue;
    const int s = row(e.u), t = row(e.v);
    const MLPoly a = MLPoly::variable(e.label, g.edges());
    if (s) m.at(s, s) += a;
    if (t) m.at(t, t) += a;
    if (s && t) {
      m.at(s, t) -= a;
      m.at(t, s) -= a;
    }
  }
  return m;
}

Diagonalization diagonalize_wrt_tree(const Graph& g, EdgeSet tree) {
  if (!is_spanning_tree(g, tree)) throw Error(ErrorCode::NotSpanningTree, "edge set is not a spanning tree");
  const int vcount = g.vertex_count();
  Diagonalization d;
  d.root = vcount;
  std::vector<int> number(vcount + 1, 0), parent(vcount + 1, 0), depth(vcount + 1, 0);
  d.vertex_of_row.clear();
  // iterative preorder DFS, children in edge-label order
  std::vector<std::pair<int, int>> stack{{d.root, 0}};
  std::vector<bool> seen(vcount + 1, false);
  while (!stack.empty()) {
    const auto [v, via] = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    if (v != d.root) {
      d.vertex_of_row.push_back(v);
      d.edge_of_row.push_back(via);
      number[v] = static_cast<int>(d.vertex_of_row.size());
    }
    std::vector<std::pair<int, int>> children;
    for (int e : tree) {
      const Edge& ed = g.edge(e);
      if (ed.u != v && ed.v != v) continue;
      const int w = ed.u == v ? ed.v : ed.u;
      if (seen[w]) continue;
      parent[w] = v;
      depth[w] = depth[v] + 1;
      children.emplace_back(w, e);
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }

  // deepest sources first; within a depth by target, then source descending
  std::vector<int> sources;
  for (int v = 1; v <= vcount; ++v)
    if (v != d.root && parent[v] != d.root) sources.push_back(v);
  std::sort(sources.begin(), sources.end(), [&](int a, int b) {
    if (depth[a] != depth[b]) return depth[a] > depth[b];
    if (number[parent[a]] != number[parent[b]]) return number[parent[a]] < number[parent[b]];
    return number[a] > number[b];
  });
  for (int v : sources) d.ops.push_back({number[v], number[parent[v]]});

  // p_matrix rows are vertices 1..n in order since the root is the highest vertex
  d.start = p_matrix(g).permuted(d.vertex_of_row);
  d.matrix = d.start;
  for (const RowColOp& op : d.ops) d.matrix.apply(op);
  return d;
}

bool diagonal_contract(const Diagonalization& d) {
  for (int k = 1; k <= d.matrix.dim(); ++k) {
    const int e = d.edge_of_row[k - 1];
    const auto occ = d.matrix.occurrences(e);
    if (occ.size() != 1 || occ[0] != std::pair{k, k}) return false;
    const auto [up, rest] = coeff_and_rest(d.matrix.at(k, k), e);
    if (!(up == MLPoly::constant(1))) return false;
  }
  return true;
}

bool diagonal_contract_modulo(const Diagonalization& d, const Graph& g) {
  const EdgeSet tree = EdgeSet::from_vector(d.edge_of_row);
  const PolyMatrix m = d.matrix.zero_vars(g.edges() - tree);
  for (int r = 1; r <= m.dim(); ++r)
    for (int c = 1; c <= m.dim(); ++c) {
      const MLPoly want = r == c ? MLPoly::variable(d.edge_of_row[r - 1]) : MLPoly();
      if (!(m.at(r, c) == want)) return false;
    }
  return true;
}

int fq_rank(std::vector<FqField::Elem>& a, int rows, int cols, const FqField& f) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r * cols + c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
    const FqField::Elem inv = f.inv(a[rank * cols + c]);
    for (int r = rank + 1; r < rows; ++r) {
      const FqField::Elem x = a[r * cols + c];
      if (!x) continue;
      const FqField::Elem m = f.mul(x, inv);
      for (int k = c; k < cols; ++k) a[r * cols + k] = f.sub(a[r * cols + k], f.mul(m, a[rank * cols + k]));
    }
    ++rank;
  }
  return rank;
}

int eval_rank(const PolyMatrix& m, const FqPoint& point, const FqField& f) {
  const int n = m.dim();
  std::vector<FqField::Elem> a(n * n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) a[(r - 1) * n + (c - 1)] = evaluate(m.at(r, c), point, f);
  return fq_rank(a, n, n, f);
}

}  // namespace c2lab
