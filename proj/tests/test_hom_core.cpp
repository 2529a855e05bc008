#include "fixtures.hpp"

#include <doctest.h>

using namespace homhopf;
using namespace fixtures;

TEST_CASE("twisted group and Sweedler algebras pass the whole suite") {
  CHECK(check_hom_hopf(kz4_twist()).passed());
  CHECK(check_hom_hopf(hopf_twist(sweedler(), sweedler_sign(), sweedler_sign())).passed());
  CHECK(check_hom_hopf(hopf_twist(cyclic(4), inversion(4), LinearOperator::identity(4))).passed());
  CHECK(check_hom_hopf(symmetric3()).passed());
}

TEST_CASE("a broken product is reported under its equation id") {
  HomHopf h = kz4_twist();
  h.alg.table[1 * 4 + 2] = Vec(0);
  CheckReport const r = check_hom_hopf(h);
  CHECK_FALSE(r.passed());
  CHECK(r.failed("Hom-assoc"));
  REQUIRE_FALSE(r.violations.empty());
  CHECK_FALSE(r.violations.front().witness.empty());
}

TEST_CASE("non-commuting structure maps fail alpha-beta-commute") {
  // conjugation by two different transpositions of S3
  HomHopf h = symmetric3();
  auto const conj = [&](int s) {
    std::vector<Vec> cols;
    for (int x = 0; x < 6; ++x) cols.push_back(h.alg.mul(h.alg.mul(Vec(s), Vec(x)), Vec(s)));
    return LinearOperator(cols);
  };
  CHECK_THROWS_AS(hopf_twist(h, conj(1), conj(2)), Error);
  h.alg.alpha = conj(1);
  h.coalg.beta = conj(2);
  CHECK(check_hom_bialgebra(h).failed("alpha-beta-commute"));
}

TEST_CASE("twists must be bialgebra endomorphisms") {
  // g^k -> (-1)^k e is multiplicative but not comultiplicative
  std::vector<Vec> cols;
  for (int k = 0; k < 4; ++k) cols.push_back(Vec(0, k % 2 ? -1 : 1));
  try {
    hopf_twist(cyclic(4), LinearOperator(cols), LinearOperator::identity(4));
    FAIL("expected NotBialgebraMorphism");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::NotBialgebraMorphism);
  }
}

TEST_CASE("antipode is the convolution inverse of the identity") {
  for (HomHopf const& h : {kz4_twist(), hopf_twist(sweedler(), sweedler_sign(), sweedler_sign())}) {
    ConvolutionInverse const c = convolution_inverse_of_identity(h);
    CHECK(c.consistent);
    CHECK(c.unique);
    REQUIRE(c.solution);
    CHECK(*c.solution == h.antipode);
    CHECK(check_convolution_inverse(h).passed());
  }
}

TEST_CASE("Hom-inverses in the twisted group algebra") {
  HomHopf const h = kz4_twist();
  auto const inv = hom_inverse(h.alg, Vec(1));
  REQUIRE(inv);
  // alpha^n(g y) = 1 forces y = g^-1 whatever n is
  CHECK(inv->inverse == Vec(3));
  CHECK_FALSE(hom_inverse(h.alg, Vec{{0, 1}, {2, 1}}));
}

TEST_CASE("op and cop variants stay Hom-Hopf") {
  HomHopf const h = hopf_twist(sweedler(), sweedler_sign(), sweedler_sign());
  OpCopVariants const v = op_cop_variants(h);
  CHECK(check_hom_hopf(v.op).passed());
  CHECK(check_hom_hopf(v.cop).passed());
  CHECK(check_hom_hopf(v.op_cop).passed());
}

TEST_CASE("twist_algebra rejects a non-endomorphism") {
  HomHopf const h = cyclic(4);
  CHECK(check_hom_algebra(twist_algebra(h.alg, inversion(4))).passed());
  CHECK_THROWS_AS(twist_algebra(h.alg, LinearOperator::scalar(4, 2)), Error);
}

TEST_CASE("trivial structures are modules and comodules") {
  MatchedPairHopf const p = finite_matched_pair();
  CHECK(check_hom_module(p.left, p.v.alg).passed());
  CHECK(check_hom_module(p.right, p.u.alg).passed());
  MutualPairHopf const m = finite_mutual_pair();
  CHECK(check_hom_comodule(m.coaction, m.f.coalg).passed());
}
