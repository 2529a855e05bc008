#include "homhopf/hom_core.hpp"

namespace homhopf {

namespace {

using Pair = std::pair<Tensor, Tensor>;

Tensor scalar_tensor(Rational const& r) {
  Tensor t;
  t.add(Index{}, r);
  return t;
}

}  // namespace

CheckReport check_hom_algebra(HomAlgebra const& a, Grading const* g) {
  CheckReport r;
  Slot const A{a.dim, g};
  LinearOperator const& al = a.alpha;

  check_equation(r, "Hom-assoc", {A, A, A}, {A}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = mul_at(op_at(mul_at(t, 1, a), 0, al), 0, a);
    Tensor rhs = mul_at(op_at(mul_at(t, 0, a), 1, al), 0, a);
    return Pair{lhs, rhs};
  });
  check_equation(r, "Hom-unit-left", {A}, {A}, [&](Index const& i) {
    return Pair{mul_at(unit_at(tensor_of(i), 0, a), 0, a), op_at(tensor_of(i), 0, al)};
  });
  check_equation(r, "Hom-unit-right", {A}, {A}, [&](Index const& i) {
    return Pair{mul_at(unit_at(tensor_of(i), 1, a), 0, a), op_at(tensor_of(i), 0, al)};
  });
  check_equation(r, "alpha-unit", {}, {A}, [&](Index const&) {
    return Pair{tensor_of(al(a.unit)), tensor_of(a.unit)};
  });
  if (a.multiplicative) {
    check_equation(r, "alpha-multiplicative", {A, A}, {A}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      return Pair{op_at(mul_at(t, 0, a), 0, al), mul_at(op_at(op_at(t, 0, al), 1, al), 0, a)};
    });
  }
  return r;
}

CheckReport check_hom_coalgebra(HomCoalgebra const& c, Grading const* g) {
  CheckReport r;
  Slot const C{c.dim, g};
  LinearOperator const& be = c.beta;

  check_equation(r, "Hom-coassoc", {C}, {C, C, C}, [&](Index const& i) {
    Tensor const d = comul_at(tensor_of(i), 0, c);
    return Pair{op_at(comul_at(d, 1, c), 0, be), op_at(comul_at(d, 0, c), 2, be)};
  });
  check_equation(r, "Hom-counit-left", {C}, {C}, [&](Index const& i) {
    return Pair{counit_at(comul_at(tensor_of(i), 0, c), 0, c), op_at(tensor_of(i), 0, be)};
  });
  check_equation(r, "Hom-counit-right", {C}, {C}, [&](Index const& i) {
    return Pair{counit_at(comul_at(tensor_of(i), 0, c), 1, c), op_at(tensor_of(i), 0, be)};
  });
  check_equation(r, "counit-beta", {C}, {}, [&](Index const& i) {
    return Pair{counit_at(op_at(tensor_of(i), 0, be), 0, c), counit_at(tensor_of(i), 0, c)};
  });
  check_equation(r, "comult-beta", {C}, {C, C}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{comul_at(op_at(t, 0, be), 0, c), op_at(op_at(comul_at(t, 0, c), 0, be), 1, be)};
  });
  return r;
}

CheckReport check_hom_bialgebra(HomBialgebra const& b) {
  CheckReport r = check_hom_algebra(b.alg, &b.grading);
  r.merge(check_hom_coalgebra(b.coalg, &b.grading));
  HomAlgebra const& a = b.alg;
  HomCoalgebra const& c = b.coalg;
  Slot const H{b.dim(), &b.grading};
  LinearOperator const& al = a.alpha;
  LinearOperator const& be = c.beta;

  check_equation(r, "unit-grouplike", {}, {H, H}, [&](Index const&) {
    Tensor const u = tensor_of(a.unit);
    return Pair{comul_at(u, 0, c), unit_at(u, 1, a)};
  });
  check_equation(r, "comult-multiplicative", {H, H}, {H, H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor lhs = comul_at(mul_at(t, 0, a), 0, c);
    Tensor d = permute(comul_at(comul_at(t, 1, c), 0, c), {0, 2, 1, 3});
    return Pair{lhs, mul_at(mul_at(d, 0, a), 1, a)};
  });
  check_equation(r, "comult-alpha", {H}, {H, H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{comul_at(op_at(t, 0, al), 0, c), op_at(op_at(comul_at(t, 0, c), 0, al), 1, al)};
  });
  check_equation(r, "counit-unit", {}, {}, [&](Index const&) {
    return Pair{scalar_tensor(c.eps(a.unit)), scalar_tensor(1)};
  });
  check_equation(r, "counit-multiplicative", {H, H}, {}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{counit_at(mul_at(t, 0, a), 0, c), counit_at(counit_at(t, 0, c), 0, c)};
  });
  check_equation(r, "counit-alpha", {H}, {}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{counit_at(op_at(t, 0, al), 0, c), counit_at(t, 0, c)};
  });
  check_equation(r, "beta-unit", {}, {H}, [&](Index const&) {
    return Pair{tensor_of(be(a.unit)), tensor_of(a.unit)};
  });
  check_equation(r, "beta-multiplicative", {H, H}, {H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{op_at(mul_at(t, 0, a), 0, be), mul_at(op_at(op_at(t, 0, be), 1, be), 0, a)};
  });
  check_equation(r, "alpha-beta-commute", {H}, {H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{op_at(op_at(t, 0, al), 0, be), op_at(op_at(t, 0, be), 0, al)};
  });
  return r;
}

CheckReport check_antipode(HomHopf const& h) {
  CheckReport r;
  HomAlgebra const& a = h.alg;
  HomCoalgebra const& c = h.coalg;
  LinearOperator const& s = h.antipode;
  Slot const H{h.dim(), &h.grading};
  auto eta_eps = [&](Index const& i) { return tensor_of(c.counit.at(i[0]) * a.unit); };

  check_equation(r, "antipode-left", {H}, {H}, [&](Index const& i) {
    return Pair{mul_at(op_at(comul_at(tensor_of(i), 0, c), 0, s), 0, a), eta_eps(i)};
  });
  check_equation(r, "antipode-right", {H}, {H}, [&](Index const& i) {
    return Pair{mul_at(op_at(comul_at(tensor_of(i), 0, c), 1, s), 0, a), eta_eps(i)};
  });
  check_equation(r, "antipode-alpha", {H}, {H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{op_at(op_at(t, 0, a.alpha), 0, s), op_at(op_at(t, 0, s), 0, a.alpha)};
  });
  check_equation(r, "antipode-beta", {H}, {H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{op_at(op_at(t, 0, c.beta), 0, s), op_at(op_at(t, 0, s), 0, c.beta)};
  });
  return r;
}

CheckReport check_antipode_derived(HomHopf const& h) {
  CheckReport r;
  HomAlgebra const& a = h.alg;
  HomCoalgebra const& c = h.coalg;
  LinearOperator const& s = h.antipode;
  Slot const H{h.dim(), &h.grading};

  check_equation(r, "antipode-unit", {}, {H}, [&](Index const&) {
    return Pair{tensor_of(s(a.unit)), tensor_of(a.unit)};
  });
  check_equation(r, "antipode-counit", {H}, {}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{counit_at(op_at(t, 0, s), 0, c), counit_at(t, 0, c)};
  });
  check_equation(r, "antipode-antimultiplicative", {H, H}, {H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor rhs = mul_at(permute(op_at(op_at(t, 0, s), 1, s), {1, 0}), 0, a);
    return Pair{op_at(mul_at(t, 0, a), 0, s), rhs};
  });
  check_equation(r, "antipode-anticomultiplicative", {H}, {H, H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor rhs = permute(op_at(op_at(comul_at(t, 0, c), 0, s), 1, s), {1, 0});
    return Pair{comul_at(op_at(t, 0, s), 0, c), rhs};
  });
  return r;
}

CheckReport check_hom_hopf(HomHopf const& h) {
  CheckReport r = check_hom_bialgebra(h);
  r.merge(check_antipode(h));
  r.merge(check_antipode_derived(h));
  return r;
}

CheckReport check_hom_module(ActionData const& m, HomAlgebra const& acting, Grading const* acting_g,
                             Grading const* carrier_g) {
  CheckReport r;
  Slot const A{acting.dim, acting_g};
  Slot const M{m.carrier_dim, carrier_g};
  LinearOperator const& ga = m.gamma;
  LinearOperator const& al = acting.alpha;

  if (m.side == Side::Left) {
    check_equation(r, "Hom-module-assoc", {A, A, M}, {M}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      Tensor lhs = act_at(op_at(mul_at(t, 0, acting), 1, ga), 0, m);
      Tensor rhs = act_at(op_at(act_at(t, 1, m), 0, al), 0, m);
      return Pair{lhs, rhs};
    });
    check_equation(r, "Hom-module-unit", {M}, {M}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      return Pair{act_at(unit_at(t, 0, acting), 0, m), op_at(t, 0, ga)};
    });
  } else {
    check_equation(r, "Hom-module-assoc", {M, A, A}, {M}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      Tensor lhs = act_at(op_at(mul_at(t, 1, acting), 0, ga), 0, m);
      Tensor rhs = act_at(op_at(act_at(t, 0, m), 1, al), 0, m);
      return Pair{lhs, rhs};
    });
    check_equation(r, "Hom-module-unit", {M}, {M}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      return Pair{act_at(unit_at(t, 1, acting), 0, m), op_at(t, 0, ga)};
    });
  }
  return r;
}

CheckReport check_hom_comodule(CoactionData const& m, HomCoalgebra const& c, Grading const* carrier_g,
                               Grading const* coalg_g) {
  CheckReport r;
  Slot const M{m.carrier_dim, carrier_g};
  Slot const C{c.dim, coalg_g};
  check_equation(r, "Hom-comodule-coassoc", {M}, {M, C, C}, [&](Index const& i) {
    Tensor const d = coact_at(tensor_of(i), 0, m);
    return Pair{op_at(comul_at(d, 1, c), 0, m.theta), op_at(coact_at(d, 0, m), 2, c.beta)};
  });
  check_equation(r, "Hom-comodule-counit", {M}, {M}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{counit_at(coact_at(t, 0, m), 1, c), op_at(t, 0, m.theta)};
  });
  return r;
}

}  // namespace homhopf
