#include "homhopf/cross_products.hpp"

namespace homhopf {

CheckReport check_mutual_pair(MutualPairHopf const& m) {
  using Pair = std::pair<Tensor, Tensor>;
  CheckReport r;
  HomHopf const& F = m.f;
  HomHopf const& U = m.u;
  Slot const Fs{F.dim(), &F.grading};
  Slot const Us{U.dim(), &U.grading};
  LinearOperator const& al = F.alg.alpha;
  LinearOperator const& be = F.coalg.beta;
  LinearOperator const& phi = U.alg.alpha;
  LinearOperator const& psi = U.coalg.beta;
  LinearOperator const psi1 = psi.power(-1);
  LinearOperator const al1 = al.power(-1);
  ActionData const& A = m.action;
  CoactionData const& C = m.coaction;

  r.merge(check_hom_module(A, U.alg, &U.grading, &F.grading), "module-");
  r.merge(check_module_algebra(U, F.alg, A, &F.grading), "module-algebra-");
  check_equation(r, "rt-f-comp", {Us, Fs}, {Fs}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{op_at(act_at(t, 0, A), 0, be), act_at(op_at(op_at(t, 0, phi), 1, be), 0, A)};
  });
  r.merge(check_hom_comodule(C, F.coalg, &U.grading, &F.grading), "comodule-");
  r.merge(check_comodule_coalgebra(F, U.coalg, C, &U.grading), "comodule-coalgebra-");
  check_equation(r, "lt-f-comp", {Us}, {Us, Fs}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{coact_at(op_at(t, 0, phi), 0, C), op_at(op_at(coact_at(t, 0, C), 0, phi), 1, be)};
  });

  check_equation(r, "comp-I", {Us, Fs}, {Fs, Fs}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = comul_at(act_at(t, 0, A), 0, F.coalg);
    // [u1_0, u1_1, u2, f1, f2] -> [u1_0, f1, u1_1, u2, f2]
    Tensor d = comul_at(coact_at(comul_at(t, 0, U.coalg), 0, C), 3, F.coalg);
    d = op_at(d, 0, psi1);
    d = op_at(d, 1, al.power(-4).compose(be.power(3)));
    d = op_at(d, 2, phi.compose(psi.power(-2)));
    d = op_at(d, 4, al1);
    d = act_at(act_at(permute(d, {0, 3, 1, 2, 4}), 0, A), 2, A);
    return Pair{lhs, mul_at(d, 1, F.alg)};
  });
  check_equation(r, "comp-II", {Us, Fs}, {}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = counit_at(act_at(t, 0, A), 0, F.coalg);
    return Pair{lhs, counit_at(counit_at(t, 1, F.coalg), 0, U.coalg)};
  });
  check_equation(r, "comp-III", {Us, Us}, {Us, Fs}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = coact_at(mul_at(t, 0, U.alg), 0, C);
    // [u1_0, u1_1, u2, u'0, u'1] -> [u1_0, u'0, u1_1, u2, u'1]
    Tensor d = coact_at(coact_at(comul_at(t, 0, U.coalg), 0, C), 3, C);
    d = op_at(d, 0, psi1);
    d = op_at(d, 1, al.power(-2).compose(be));
    d = op_at(d, 2, phi.power(-1));
    d = op_at(d, 4, al1);
    d = act_at(mul_at(permute(d, {0, 3, 1, 2, 4}), 0, U.alg), 2, A);
    return Pair{lhs, mul_at(d, 1, F.alg)};
  });
  LinearOperator const a2b2 = al.power(-2).compose(be.power(2));
  check_equation(r, "comp-IV", {Us, Fs}, {Us, Fs}, [&](Index const& i) {
    Tensor const d = comul_at(tensor_of(i), 0, U.coalg);  // [u1, u2, f]
    Tensor lhs = op_at(coact_at(d, 0, C), 1, a2b2);       // [u1_0, u1_1, u2, f]
    lhs = mul_at(act_at(lhs, 2, A), 1, F.alg);
    Tensor rhs = op_at(coact_at(d, 1, C), 2, a2b2);  // [u1, u2_0, u2_1, f]
    rhs = mul_at(act_at(permute(rhs, {1, 0, 3, 2}), 1, A), 1, F.alg);
    return Pair{lhs, rhs};
  });
  return r;
}

}  // namespace homhopf
