#include "homhopf/cross_products.hpp"

namespace homhopf {

namespace {

using Pair = std::pair<Tensor, Tensor>;

Tensor scaled_vec(Vec const& v, Rational const& c) {
  Vec w = v;
  w *= c;
  return tensor_of(w);
}

}  // namespace

LinearOperator kron(LinearOperator const& a, LinearOperator const& b) {
  std::vector<Vec> cols;
  int const db = b.dim();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < db; ++j) {
      Vec c;
      for (auto const& [x, p] : a(i))
        for (auto const& [y, q] : b(j)) c.add(x * db + y, p * q);
      cols.push_back(std::move(c));
    }
  return LinearOperator(std::move(cols));
}

ActionData trivial_action(Side side, HomBialgebra const& acting, LinearOperator gamma) {
  ActionData a;
  a.side = side;
  a.acting_dim = acting.dim();
  a.carrier_dim = gamma.dim();
  a.table.resize(static_cast<std::size_t>(a.acting_dim) * a.carrier_dim);
  for (int h = 0; h < a.acting_dim; ++h)
    for (int x = 0; x < a.carrier_dim; ++x) {
      Vec v = gamma(x);
      v *= acting.coalg.counit.at(h);
      a.table[static_cast<std::size_t>(h) * a.carrier_dim + x] = std::move(v);
    }
  a.gamma = std::move(gamma);
  return a;
}

CoactionData trivial_coaction(HomBialgebra const& coacting, LinearOperator theta) {
  CoactionData c;
  c.carrier_dim = theta.dim();
  c.coalgebra_dim = coacting.dim();
  for (int x = 0; x < c.carrier_dim; ++x) {
    Tensor t;
    for (auto const& [i, a] : theta(x))
      for (auto const& [j, b] : coacting.alg.unit) t.add(Index{i, j}, a * b);
    c.table.push_back(std::move(t));
  }
  c.theta = std::move(theta);
  return c;
}

CheckReport check_module_algebra(HomBialgebra const& h, HomAlgebra const& a, ActionData const& m,
                                 Grading const* carrier_g) {
  CheckReport r;
  Slot const H{h.dim(), &h.grading};
  Slot const A{a.dim, carrier_g};
  LinearOperator const& psi = h.coalg.beta;
  LinearOperator const psi2 = psi.power(2);
  bool const left = m.side == Side::Left;
  // Positions of the acting and carrier slots in a two-slot tensor.
  std::size_t const ph = left ? 0 : 1;
  std::size_t const pa = left ? 1 : 0;

  check_equation(r, "Hom-mod-alg-00", left ? std::vector{H, A} : std::vector{A, H}, {A}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = op_at(act_at(t, 0, m), 0, a.alpha);
    Tensor rhs = act_at(op_at(op_at(t, ph, psi), pa, a.alpha), 0, m);
    return Pair{lhs, rhs};
  });
  if (left) {
    check_equation(r, "Hom-mod-alg-I", {H, A, A}, {A}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      Tensor lhs = act_at(op_at(mul_at(t, 1, a), 0, psi2), 0, m);
      // [h1, h2, a, a'] -> [h1, a, h2, a']
      Tensor d = permute(comul_at(t, 0, h.coalg), {0, 2, 1, 3});
      Tensor rhs = mul_at(act_at(act_at(d, 2, m), 0, m), 0, a);
      return Pair{lhs, rhs};
    });
    check_equation(r, "Hom-mod-alg-II", {H}, {A}, [&](Index const& i) {
      Tensor lhs = act_at(unit_at(tensor_of(i), 1, a), 0, m);
      return Pair{lhs, scaled_vec(a.unit, h.coalg.counit.at(i[0]))};
    });
  } else {
    check_equation(r, "Hom-mod-alg-I", {A, A, H}, {A}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      Tensor lhs = act_at(op_at(mul_at(t, 0, a), 1, psi2), 0, m);
      // [a, a', h1, h2] -> [a, h1, a', h2]
      Tensor d = permute(comul_at(t, 2, h.coalg), {0, 2, 1, 3});
      Tensor rhs = mul_at(act_at(act_at(d, 2, m), 0, m), 0, a);
      return Pair{lhs, rhs};
    });
    check_equation(r, "Hom-mod-alg-II", {H}, {A}, [&](Index const& i) {
      Tensor lhs = act_at(unit_at(tensor_of(i), 0, a), 0, m);
      return Pair{lhs, scaled_vec(a.unit, h.coalg.counit.at(i[0]))};
    });
  }
  return r;
}

CheckReport check_module_coalgebra(HomBialgebra const& h, HomCoalgebra const& c, ActionData const& m,
                                   Grading const* carrier_g) {
  CheckReport r;
  Slot const H{h.dim(), &h.grading};
  Slot const C{c.dim, carrier_g};
  LinearOperator const& psi = h.coalg.beta;
  bool const left = m.side == Side::Left;
  std::size_t const ph = left ? 0 : 1;
  std::size_t const pc = left ? 1 : 0;
  auto const in = left ? std::vector{H, C} : std::vector{C, H};

  check_equation(r, "Hom-mod-coalg-00", in, {C}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = op_at(act_at(t, 0, m), 0, c.beta);
    Tensor rhs = act_at(op_at(op_at(t, ph, psi), pc, c.beta), 0, m);
    return Pair{lhs, rhs};
  });
  check_equation(r, "Hom-mod-coalg-I", in, {C, C}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = comul_at(act_at(t, 0, m), 0, c);
    // Both factors split, then paired as [x1, y1, x2, y2].
    Tensor d = permute(comul_at(comul_at(t, 1, left ? c : h.coalg), 0, left ? h.coalg : c), {0, 2, 1, 3});
    Tensor rhs = act_at(act_at(d, 2, m), 0, m);
    return Pair{lhs, rhs};
  });
  check_equation(r, "Hom-mod-coalg-II", in, {}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = counit_at(act_at(t, 0, m), 0, c);
    Tensor rhs = counit_at(counit_at(t, 1, left ? c : h.coalg), 0, left ? h.coalg : c);
    return Pair{lhs, rhs};
  });
  return r;
}

CheckReport check_comodule_algebra(HomBialgebra const& h, HomAlgebra const& a, CoactionData const& m,
                                   Grading const* carrier_g) {
  CheckReport r;
  Slot const A{a.dim, carrier_g};
  Slot const H{h.dim(), &h.grading};
  check_equation(r, "Hom-comod-alg-00", {A}, {A, H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = coact_at(op_at(t, 0, a.alpha), 0, m);
    Tensor rhs = op_at(op_at(coact_at(t, 0, m), 0, a.alpha), 1, h.alg.alpha);
    return Pair{lhs, rhs};
  });
  check_equation(r, "Hom-comod-alg-I", {A, A}, {A, H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = coact_at(mul_at(t, 0, a), 0, m);
    // [a0, a1, a'0, a'1] -> [a0, a'0, a1, a'1]
    Tensor d = permute(coact_at(coact_at(t, 1, m), 0, m), {0, 2, 1, 3});
    Tensor rhs = mul_at(mul_at(d, 0, a), 1, h.alg);
    return Pair{lhs, rhs};
  });
  check_equation(r, "Hom-comod-alg-II", {}, {A, H}, [&](Index const&) {
    Tensor const u = tensor_of(a.unit);
    return Pair{coact_at(u, 0, m), unit_at(u, 1, h.alg)};
  });
  return r;
}

CheckReport check_comodule_coalgebra(HomBialgebra const& h, HomCoalgebra const& c, CoactionData const& m,
                                     Grading const* carrier_g) {
  CheckReport r;
  Slot const C{c.dim, carrier_g};
  Slot const H{h.dim(), &h.grading};
  LinearOperator const phi2 = h.alg.alpha.power(2);
  check_equation(r, "Hom-comod-coalg-00", {C}, {C, H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = coact_at(op_at(t, 0, c.beta), 0, m);
    Tensor rhs = op_at(op_at(coact_at(t, 0, m), 0, c.beta), 1, h.alg.alpha);
    return Pair{lhs, rhs};
  });
  check_equation(r, "Hom-comod-coalg-I", {C}, {C, C, H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = op_at(comul_at(coact_at(t, 0, m), 0, c), 2, phi2);
    // [c1_0, c1_1, c2_0, c2_1] -> [c1_0, c2_0, c1_1, c2_1]
    Tensor d = permute(coact_at(coact_at(comul_at(t, 0, c), 1, m), 0, m), {0, 2, 1, 3});
    Tensor rhs = mul_at(d, 2, h.alg);
    return Pair{lhs, rhs};
  });
  check_equation(r, "Hom-comod-coalg-II", {C}, {H}, [&](Index const& i) {
    Tensor lhs = counit_at(coact_at(tensor_of(i), 0, m), 0, c);
    return Pair{lhs, scaled_vec(h.alg.unit, c.counit.at(i[0]))};
  });
  return r;
}

CheckReport check_matched_pair_hopf(MatchedPairHopf const& p) {
  CheckReport r;
  HomHopf const& U = p.u;
  HomHopf const& V = p.v;
  Slot const Us{U.dim(), &U.grading};
  Slot const Vs{V.dim(), &V.grading};
  LinearOperator const& phi = U.alg.alpha;
  LinearOperator const& psi = U.coalg.beta;
  LinearOperator const& al = V.alg.alpha;
  LinearOperator const& be = V.coalg.beta;
  LinearOperator const al1be1 = al.power(-1).compose(be.power(-1));
  LinearOperator const al2be1 = al.power(-2).compose(be.power(-1));
  LinearOperator const be1 = be.power(-1);
  LinearOperator const psi1 = psi.power(-1);
  LinearOperator const ph1ps1 = phi.power(-1).compose(psi1);
  LinearOperator const ph2ps1 = phi.power(-2).compose(psi1);
  ActionData const& L = p.left;
  ActionData const& R = p.right;

  r.merge(check_hom_module(L, V.alg, &V.grading, &U.grading), "left-");
  r.merge(check_module_coalgebra(V, U.coalg, L, &U.grading), "left-");
  check_equation(r, "rt-phi-compatibility", {Vs, Us}, {Us}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{op_at(act_at(t, 0, L), 0, phi), act_at(op_at(op_at(t, 0, al), 1, phi), 0, L)};
  });
  r.merge(check_hom_module(R, U.alg, &U.grading, &V.grading), "right-");
  r.merge(check_module_coalgebra(U, V.coalg, R, &V.grading), "right-");
  check_equation(r, "lt-a-compatibility", {Vs, Us}, {Vs}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{op_at(act_at(t, 0, R), 0, al), act_at(op_at(op_at(t, 0, al), 1, phi), 0, R)};
  });

  check_equation(r, "v-rt-uu'", {Vs, Us, Us}, {Us}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = act_at(mul_at(t, 1, U.alg), 0, L);
    // [v1, v2, u1, u2, u'] -> [v1, u1, v2, u2, u']
    Tensor d = comul_at(comul_at(t, 1, U.coalg), 0, V.coalg);
    d = op_at(op_at(op_at(op_at(d, 0, al1be1), 1, al2be1), 2, psi1), 3, ph1ps1);
    d = permute(d, {0, 2, 1, 3, 4});
    d = act_at(act_at(d, 2, R), 2, L);
    return Pair{lhs, mul_at(act_at(d, 0, L), 0, U.alg)};
  });
  check_equation(r, "vv'-lt-u", {Vs, Vs, Us}, {Vs}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = act_at(mul_at(t, 0, V.alg), 0, R);
    // [v, v'1, v'2, u1, u2] -> [v, v'1, u1, v'2, u2]
    Tensor d = comul_at(comul_at(t, 2, U.coalg), 1, V.coalg);
    d = op_at(op_at(op_at(op_at(d, 1, al1be1), 2, be1), 3, ph2ps1), 4, ph1ps1);
    d = permute(d, {0, 1, 3, 2, 4});
    d = act_at(d, 1, L);
    d = act_at(act_at(d, 0, R), 1, R);
    return Pair{lhs, mul_at(d, 0, V.alg)};
  });
  check_equation(r, "v-lt-u-ot-v-rt-u-switch", {Vs, Us}, {Vs, Us}, [&](Index const& i) {
    Tensor const d = comul_at(comul_at(tensor_of(i), 1, U.coalg), 0, V.coalg);  // [v1, v2, u1, u2]
    Tensor lhs = act_at(act_at(permute(d, {0, 2, 1, 3}), 0, R), 1, L);
    Tensor rhs = act_at(act_at(permute(d, {1, 3, 0, 2}), 0, R), 1, L);
    return Pair{lhs, rhs};
  });
  check_equation(r, "actions-on-1-left", {Vs}, {Us}, [&](Index const& i) {
    Tensor lhs = act_at(unit_at(tensor_of(i), 1, U.alg), 0, L);
    return Pair{lhs, scaled_vec(U.alg.unit, V.coalg.counit.at(i[0]))};
  });
  check_equation(r, "actions-on-1-right", {Us}, {Vs}, [&](Index const& i) {
    Tensor lhs = act_at(unit_at(tensor_of(i), 0, V.alg), 0, R);
    return Pair{lhs, scaled_vec(V.alg.unit, U.coalg.counit.at(i[0]))};
  });
  return r;
}

}  // namespace homhopf
