#include "c2lab/c2.hpp"

#include <algorithm>

#include "c2lab/dodgson.hpp"
#include "c2lab/error.hpp"
#include "c2lab/graph_poly.hpp"
#include "c2lab/position.hpp"

namespace c2lab {

namespace {

BigInt count_with(const MLPoly& p, const FqField& f, const CountOptions& opt, CountMethod m) {
  return m == CountMethod::Reduced ? count_reduced(p, f).raw : count_zeros(p, f, opt).raw;
}

C2Value divide(const BigInt& raw, int q, const std::string& what) {
  const BigInt q2 = BigInt(q) * q;
  if (raw % q2 != 0)
    throw Error(ErrorCode::DivisibilityViolated,
                what + " = " + raw.str() + " is not divisible by q^2 = " + q2.str());
  C2Value v;
  v.q = q;
  v.raw = raw;
  v.quotient = raw / q2;
  v.value = static_cast<int>(mod_floor(v.quotient, q));
  return v;
}

}  // namespace

nlohmann::json C2Value::to_json() const {
  return {{"q", q}, {"raw", raw.str()}, {"quotient", quotient.str()}, {"value", value}};
}

C2Value c2_param(const Graph& g, const FqField& f, const CountOptions& opt, CountMethod method) {
  if (g.n() < 2) throw Error(ErrorCode::PreconditionUnmet, "c2 needs n_G >= 2");
  return divide(count_with(psi(g), f, opt, method), f.q(), "[Psi_G]");
}

C2Value c2_dual(const Graph& g, const FqField& f, const CountOptions& opt, CountMethod method) {
  if (g.loop_number() < 2) throw Error(ErrorCode::PreconditionUnmet, "dual c2 needs h_G >= 2");
  return divide(count_with(phi(g), f, opt, method), f.q(), "[phi_G]");
}

C2Value c2_pos(const Graph& g, const FqField& f, const CountOptions& opt) {
  if (g.n() < 2 || g.edge_count() > 2 * g.n())
    throw Error(ErrorCode::PreconditionUnmet, "position-space c2 needs n_G >= 2 and N_G <= 2 n_G");
  return divide(quadric_union_count(g, f, opt).raw, f.q(), "[q_1...q_N]");
}

std::pair<MLPoly, MLPoly> triangle_pair(const Graph& g, EdgeSet triangle) {
  const auto all = triangles(g);
  if (std::find(all.begin(), all.end(), triangle) == all.end())
    throw Error(ErrorCode::NotATriangle, "edges " + triangle.to_string() + " do not form a triangle");
  const auto e = triangle.to_vector();
  const EdgeSet one{e[0]}, two{e[1]}, three{e[2]};
  return {phi_sym(g, one, two, three), phi_sym(g, one | three, two | three)};
}

TriangleCount c2_dual_triangle(const Graph& g, EdgeSet triangle, const FqField& f, const CountOptions& opt) {
  auto [a, b] = triangle_pair(g, triangle);
  if (g.loop_number() < 3) throw Error(ErrorCode::PreconditionUnmet, "triangle formula needs h_G >= 3");
  TriangleCount t;
  t.q = f.q();
  t.raw = count_zeros({a, b}, f, g.edge_count() - 3, opt).raw;
  t.value = static_cast<int>(mod_floor(t.raw, f.q()));
  return t;
}

std::pair<BigInt, BigInt> s_t_sums(const Graph& g, int t, const FqField& f, const CountOptions& opt) {
  if (t < 1 || t > g.n()) throw Error(ErrorCode::InvalidRange, "t must lie in [1, n_G]");
  BigInt sp = 0, sf = 0;
  for_each_subset_of_size(g.edges(), t, [&](EdgeSet i) {
    for_each_subset_of_size(g.edges() - i, t, [&](EdgeSet j) {
      sp += count_zeros_torus(psi_minor(g, i, j), f, opt).raw;
      sf += count_zeros_torus(phi_minor(g, i, j), f, opt).raw;
    });
  });
  return {sp, sf};
}

}  // namespace c2lab
