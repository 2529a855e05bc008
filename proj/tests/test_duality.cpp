#include "fixtures.hpp"

#include "homhopf/duality.hpp"
#include "homhopf/truncated_uea.hpp"

#include <doctest.h>

using namespace homhopf;
using namespace fixtures;

TEST_CASE("duals of finite Hom-Hopf algebras") {
  for (HomHopf const& h : {kz4_twist(), hopf_twist(sweedler(), sweedler_sign(), sweedler_sign()), symmetric3()}) {
    HomHopf const d = dual_hom_hopf(h);
    CHECK(check_hom_hopf(d).passed());
    CHECK(same_tables(dual_hom_hopf(d), h));
    // twists of the dual are (beta^-1)* and (alpha^-1)*
    CHECK(d.alg.alpha == h.coalg.beta.inverse().transpose());
    CHECK(d.coalg.beta == h.alg.alpha.inverse().transpose());
  }
}

TEST_CASE("dual of a group algebra is the function algebra") {
  HomHopf const d = dual_hom_hopf(cyclic(3));
  // delta functions multiply pointwise
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d.alg.mul(i, j) == (i == j ? Vec(i) : Vec{}));
  CHECK(d.alg.unit == Vec{{0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("coregular actions are Hom-modules") {
  HomHopf const h = kz4_twist();
  CHECK(check_hom_module(coregular_left(h.alg), h.alg).passed());
  CHECK(check_hom_module(coregular_right(h.alg), h.alg).passed());
}

TEST_CASE("pairing against the dual basis") {
  CHECK(pairing(Vec{{0, 2}, {1, 3}}, Vec{{1, 5}, {2, 7}}) == 15);
}

TEST_CASE("graded dual of a truncated enveloping algebra") {
  TruncatedUEA const u(abelian_hom_lie(2, LinearOperator::identity(2)), 3);
  GradedDual const g = graded_dual(u.hopf());
  CHECK(g.dims == std::vector<int>{1, 2, 3, 4});
  CHECK(g.dual.grading.bound == 3);
  CHECK(check_hom_hopf(g.dual).passed());
}
