#include "homhopf/cross_products.hpp"

namespace homhopf {

namespace {

struct BicrossMaps {
  MutualPairHopf const& m;
  LinearOperator f_twist, u1_twist, u2_twist, f2_twist;

  explicit BicrossMaps(MutualPairHopf const& mp)
      : m(mp),
        f_twist(mp.f.alg.alpha.power(-1).compose(mp.f.coalg.beta)),
        u1_twist(mp.u.alg.alpha.power(-1).compose(mp.u.coalg.beta.power(-1))),
        u2_twist(mp.u.coalg.beta.power(-1)),
        f2_twist(mp.f.alg.alpha.power(-1)) {}

  // [f, u, f', u'] -> flattened (f, u) * (f', u')
  Vec product(Tensor const& t) const {
    Tensor d = comul_at(t, 1, m.u.coalg);  // [f, u1, u2, f', u']
    d = op_at(op_at(op_at(op_at(d, 0, f_twist), 1, u1_twist), 2, u2_twist), 3, f2_twist);
    // The U factor goes first so that a vanishing F factor cannot hide an
    // overflow of the U product.
    d = mul_at(permute(d, {0, 1, 3, 2, 4}), 3, m.u.alg);
    d = mul_at(act_at(d, 1, m.action), 0, m.f.alg);
    return vec_of(flatten_pair(d, 0, m.u.dim()));
  }
};

}  // namespace

HomHopf build_bicrossproduct(MutualPairHopf const& m, bool verify) {
  if (verify) {
    CheckReport const r = check_mutual_pair(m);
    if (!r.passed())
      throw Error(Errc::NotMutualPair, "mutual pair conditions fail: " + r.failed_equations().front());
  }
  HomHopf const& F = m.f;
  HomHopf const& U = m.u;
  int const du = U.dim();
  int const n = F.dim() * du;
  BicrossMaps const maps(m);
  LinearOperator const& al = F.alg.alpha;
  LinearOperator const& be = F.coalg.beta;

  HomHopf h;
  h.alg.dim = n;
  h.alg.table = tabulate(n, n, [&](int a, int b) {
    return maps.product(tensor_of(Index{a / du, a % du, b / du, b % du}));
  });
  for (auto const& [i, a] : F.alg.unit)
    for (auto const& [j, b] : U.alg.unit) h.alg.unit.add(i * du + j, a * b);
  h.alg.alpha = kron(be, U.alg.alpha);

  h.coalg.dim = n;
  h.coalg.beta = kron(al, U.coalg.beta);
  LinearOperator const f1 = al.compose(be.power(-1));
  LinearOperator const f2 = be.power(-1);
  LinearOperator const u10 = U.alg.alpha.power(-1);
  LinearOperator const u11 = al.power(-2);
  for (int a = 0; a < n; ++a) {
    // [f1, f2, u1_0, u1_1, u2] -> [f1, u1_0, f2, u1_1, u2]
    Tensor d = coact_at(comul_at(comul_at(tensor_of(Index{a / du, a % du}), 0, F.coalg), 2, U.coalg), 2, m.coaction);
    d = op_at(op_at(op_at(op_at(d, 0, f1), 1, f2), 2, u10), 3, u11);
    d = mul_at(permute(d, {0, 2, 1, 3, 4}), 2, F.alg);
    h.coalg.comult.push_back(flatten_pair(flatten_pair(d, 0, du), 1, du));
    h.coalg.counit.push_back(F.coalg.counit.at(a / du) * U.coalg.counit.at(a % du));
  }

  // S(f ⊗ u) = (1, S_U(phi^-2 u0)) * (S_F(alpha^-1 beta^-1 f ⋆ alpha^-2 beta^-1 u1), 1)
  LinearOperator const sf = al.power(-1).compose(be.power(-1));
  LinearOperator const su = U.antipode.compose(U.alg.alpha.power(-2));
  LinearOperator const s1 = al.power(-2).compose(be.power(-1));
  std::vector<Vec> cols;
  for (int a = 0; a < n; ++a) {
    Tensor d = coact_at(tensor_of(Index{a / du, a % du}), 1, m.coaction);  // [f, u0, u1]
    d = op_at(op_at(op_at(d, 0, sf), 1, su), 2, s1);
    d = op_at(mul_at(permute(d, {1, 0, 2}), 1, F.alg), 1, F.antipode);
    d = unit_at(unit_at(d, 0, F.alg), 3, U.alg);
    cols.push_back(maps.product(d));
  }
  h.antipode = LinearOperator(std::move(cols));

  // Coefficients are trusted up to the dual bound carried by F.
  if (F.grading.has_dual_bound()) {
    for (int a = 0; a < n; ++a) h.grading.dual_degree.push_back(F.grading.dual_degree.at(a / du));
    h.grading.bound = F.grading.bound;
  }
  if (!U.grading.degree.empty())
    for (int a = 0; a < n; ++a) h.grading.degree.push_back(U.grading.degree.at(a % du));
  return h;
}

}  // namespace homhopf
