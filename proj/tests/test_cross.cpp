#include "fixtures.hpp"

#include "homhopf/lifted_actions.hpp"

#include <doctest.h>

using namespace homhopf;
using namespace fixtures;

TEST_CASE("kron acts factorwise") {
  LinearOperator const a({Vec(1), Vec(0)});
  LinearOperator const b({Vec(0, 2), Vec(2), Vec(1, -1)});
  LinearOperator const k = kron(a, b);
  CHECK(k.dim() == 6);
  // e0 ⊗ e2 -> e1 ⊗ (-e1)
  CHECK(k(0 * 3 + 2) == Vec(1 * 3 + 1, -1));
  CHECK(kron(a, b).inverse() == kron(a.inverse(), b.inverse()));
}

TEST_CASE("trivial structures satisfy the symmetry conditions") {
  MutualPairHopf const m = finite_mutual_pair();
  CHECK(check_module_algebra(m.u, m.f.alg, m.action).passed());
  CHECK(check_module_coalgebra(m.u, m.f.coalg, m.action).passed());
  CHECK(check_comodule_algebra(m.f, m.u.alg, m.coaction).passed());
  CHECK(check_comodule_coalgebra(m.f, m.u.coalg, m.coaction).passed());
}

TEST_CASE("a scaled action is not a module coalgebra action") {
  MatchedPairHopf const p = perturbed_pair(2);
  CheckReport const r = check_module_coalgebra(p.v, p.u.coalg, p.left);
  CHECK(r.failed("Hom-mod-coalg-00"));
}

TEST_CASE("matched pair and its perturbations") {
  CHECK(check_matched_pair_hopf(finite_matched_pair()).passed());
  CHECK(check_matched_pair_hopf(perturbed_pair(0)).failed("v-rt-uu'"));
  CHECK(check_matched_pair_hopf(perturbed_pair(1)).failed("vv'-lt-u"));
  CHECK(check_matched_pair_hopf(perturbed_pair(1)).failed("v-lt-u-ot-v-rt-u-switch"));
  CHECK(check_matched_pair_hopf(perturbed_pair(2)).failed("rt-phi-compatibility"));
  for (int i = 0; i < 3; ++i) {
    try {
      build_double_cross_product(perturbed_pair(i));
      FAIL("expected NotMatchedPair");
    } catch (Error const& e) {
      CHECK(e.code() == Errc::NotMatchedPair);
    }
  }
}

TEST_CASE("double cross product contains both factors") {
  MatchedPairHopf const p = finite_matched_pair();
  HomHopf const d = build_double_cross_product(p);
  CHECK(d.dim() == 16);
  CHECK(check_hom_hopf(d).passed());
  int const dv = p.v.dim();
  // u ⊗ 1 and 1 ⊗ v multiply as in U and V
  for (int a = 0; a < p.u.dim(); ++a)
    for (int b = 0; b < p.u.dim(); ++b) {
      Vec expected;
      for (auto const& [k, c] : p.u.alg.mul(a, b)) expected.add(k * dv, c);
      CHECK(d.alg.mul(a * dv, b * dv) == expected);
    }
  for (int a = 0; a < dv; ++a)
    for (int b = 0; b < dv; ++b) CHECK(d.alg.mul(a, b) == p.v.alg.mul(a, b));
  CHECK(d.alg.unit == Vec(0));
  CHECK(d.alg.alpha == kron(p.u.alg.alpha, p.v.alg.alpha));
}

TEST_CASE("bicrossproduct of the finite mutual pair") {
  MutualPairHopf const m = finite_mutual_pair();
  CHECK(check_mutual_pair(m).passed());
  HomHopf const b = build_bicrossproduct(m);
  CHECK(b.dim() == 16);
  CHECK(check_hom_hopf(b).passed());
  CHECK(b.alg.alpha == kron(m.f.coalg.beta, m.u.alg.alpha));
  CHECK(b.coalg.beta == kron(m.f.alg.alpha, m.u.coalg.beta));

  MutualPairHopf bad = m;
  *bad.action.table[1 * 4 + 1] *= Rational(3);
  try {
    build_bicrossproduct(bad);
    FAIL("expected NotMutualPair");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::NotMutualPair);
  }
}

TEST_CASE("lifting x ▷ y = y together with x ◁ y = x") {
  MatchedPairLie p = fixture_b();
  p.right.table = {Vec(0)};
  REQUIRE(check_matched_pair_lie(p).passed());
  TruncatedUEA const ug(p.g, 3), uh(p.h, 3);
  LiftedActions const l(p, ug, uh);
  CHECK(l.check_well_defined().passed());
  MatchedPairHopf const h{ug.hopf(), uh.hopf(), l.left_action(), l.right_action()};
  CHECK(check_matched_pair_hopf(h).passed());
}
