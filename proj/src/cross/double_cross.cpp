#include "homhopf/cross_products.hpp"

namespace homhopf {

namespace {

// [u, v, u', v'] -> [u v-part, v-part], the two factors of (u ⊗ v)(u' ⊗ v').
Tensor dcp_product(MatchedPairHopf const& p, Tensor const& t, LinearOperator const& vt, LinearOperator const& ut) {
  Tensor d = comul_at(comul_at(t, 2, p.u.coalg), 1, p.v.coalg);  // [u, v1, v2, u'1, u'2, v']
  d = op_at(op_at(op_at(op_at(d, 1, vt), 2, vt), 3, ut), 4, ut);
  d = permute(d, {0, 1, 3, 2, 4, 5});
  d = act_at(act_at(d, 1, p.left), 2, p.right);
  return mul_at(mul_at(d, 0, p.u.alg), 1, p.v.alg);
}

}  // namespace

HomHopf build_double_cross_product(MatchedPairHopf const& p, bool verify) {
  if (verify) {
    CheckReport const r = check_matched_pair_hopf(p);
    if (!r.passed())
      throw Error(Errc::NotMatchedPair, "matched pair conditions fail: " + r.failed_equations().front());
  }
  HomHopf const& U = p.u;
  HomHopf const& V = p.v;
  int const du = U.dim();
  int const dv = V.dim();
  int const n = du * dv;
  LinearOperator const vt = V.alg.alpha.power(-1).compose(V.coalg.beta.power(-1));
  LinearOperator const ut = U.alg.alpha.power(-1).compose(U.coalg.beta.power(-1));
  auto const product = [&](Tensor const& t) { return vec_of(flatten_pair(dcp_product(p, t, vt, ut), 0, dv)); };

  HomHopf h;
  h.alg.dim = n;
  h.alg.table = tabulate(n, n, [&](int a, int b) {
    return product(tensor_of(Index{a / dv, a % dv, b / dv, b % dv}));
  });
  for (auto const& [i, a] : U.alg.unit)
    for (auto const& [j, b] : V.alg.unit) h.alg.unit.add(i * dv + j, a * b);
  h.alg.alpha = kron(U.alg.alpha, V.alg.alpha);

  h.coalg.dim = n;
  h.coalg.beta = kron(U.coalg.beta, V.coalg.beta);
  for (int a = 0; a < n; ++a) {
    Tensor d = comul_at(comul_at(tensor_of(Index{a / dv, a % dv}), 1, V.coalg), 0, U.coalg);
    d = permute(d, {0, 2, 1, 3});
    h.coalg.comult.push_back(flatten_pair(flatten_pair(d, 0, dv), 1, dv));
    h.coalg.counit.push_back(U.coalg.counit.at(a / dv) * V.coalg.counit.at(a % dv));
  }

  // S(u ⊗ v) = (1 ⊗ S(alpha^-1 v)) (S(phi^-1 u) ⊗ 1)
  LinearOperator const su = U.antipode.compose(U.alg.alpha.power(-1));
  LinearOperator const sv = V.antipode.compose(V.alg.alpha.power(-1));
  std::vector<Vec> cols;
  for (int a = 0; a < n; ++a) {
    Tensor t = op_at(op_at(tensor_of(Index{a / dv, a % dv}), 0, su), 1, sv);
    t = unit_at(unit_at(permute(t, {1, 0}), 0, U.alg), 3, V.alg);
    cols.push_back(product(t));
  }
  h.antipode = LinearOperator(std::move(cols));

  if (!U.grading.degree.empty() && !V.grading.degree.empty())
    for (int a = 0; a < n; ++a) h.grading.degree.push_back(U.grading.degree.at(a / dv) + V.grading.degree.at(a % dv));
  return h;
}

}  // namespace homhopf
