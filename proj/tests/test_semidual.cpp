#include "fixtures.hpp"

#include "homhopf/duality.hpp"

#include <doctest.h>

using namespace homhopf;
using namespace fixtures;

TEST_CASE("trivial action gives the coaction u -> phi(u) ⊗ epsilon") {
  MatchedPairHopf const p = finite_matched_pair();
  CoactionData const c = coaction_from_action(p.v, p.left);
  REQUIRE(c.table.size() == static_cast<std::size_t>(p.u.dim()));
  CHECK(c.theta == p.u.alg.alpha);
  for (int u = 0; u < p.u.dim(); ++u) {
    Tensor expected;
    for (auto const& [i, a] : p.u.alg.alpha(u))
      for (int k = 0; k < p.v.dim(); ++k) expected.add(Index{i, k}, a * p.v.coalg.counit[k]);
    CHECK(c.table[u] == expected);
  }
}

TEST_CASE("trivial right action dualizes to u ▷ f = epsilon(u) (gamma^-1)* f") {
  MatchedPairHopf const p = finite_matched_pair();
  ActionData const a = dual_left_action_from_right_action(p.u, p.right);
  LinearOperator const g = p.right.gamma.inverse().transpose();
  CHECK(a.gamma == g);
  for (int u = 0; u < p.u.dim(); ++u)
    for (int f = 0; f < p.v.dim(); ++f) CHECK(a.act(u, f) == p.u.coalg.counit[u] * g(f));
}

TEST_CASE("coaction recovers the action through the pairing") {
  HomLieHopfResult const r = build_hom_lie_hopf(fixture_b(), 3);
  MatchedPairHopf const& p = r.matched_pair;
  // V = U(h) acts on U = U(g)
  CoactionData const c = coaction_from_action(p.v, p.left);
  LinearOperator const phi2 = p.v.alg.alpha.power(2);
  for (int v = 0; v < p.v.dim(); ++v)
    for (int u = 0; u < p.u.dim(); ++u) {
      if (!p.left.table[v * p.u.dim() + u]) continue;
      Vec got;
      for (auto const& [k, c0] : c.table[u]) got.add(k[0], c0 * pairing(Vec(k[1]), phi2(v)));
      CHECK(got == *p.left.table[v * p.u.dim() + u]);
    }
}

namespace {

// k[Z/7] twisted by g -> g^2, an automorphism of order 3.
MatchedPairHopf order_three_pair() {
  std::vector<Vec> sq;
  for (int k = 0; k < 7; ++k) sq.push_back(Vec(2 * k % 7));
  MatchedPairHopf p;
  p.u = cyclic(2);
  p.v = hopf_twist(cyclic(7), LinearOperator(sq), LinearOperator::identity(7));
  p.left = trivial_action(Side::Left, p.v, p.u.alg.alpha);
  p.right = trivial_action(Side::Right, p.u, p.v.alg.alpha);
  return p;
}

}  // namespace

TEST_CASE("order constraint on the twists") {
  MatchedPairHopf const p = order_three_pair();
  REQUIRE(check_matched_pair_hopf(p).passed());
  CHECK_FALSE(order_constraints_hold(p));
  try {
    semidualize(p);
    FAIL("expected OrderConstraintViolated");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::OrderConstraintViolated);
  }
  MutualPairHopf const m = semidualize(p, SemidualConfig{false});
  CHECK(m.f.dim() == 7);
  CHECK(order_constraints_hold(finite_matched_pair()));
}

TEST_CASE("Hom-Lie twist of order three is refused") {
  MatchedPairLie p;
  LinearOperator const rot({Vec(1), Vec{{0, -1}, {1, -1}}});
  REQUIRE(rot.power(3).is_identity());
  p.g = abelian_hom_lie(2, rot);
  p.h = abelian_hom_lie(1, LinearOperator::identity(1));
  p.left = trivial_lie_action(Side::Left, 1, p.g.phi);
  p.right = trivial_lie_action(Side::Right, 2, p.h.phi);
  try {
    build_hom_lie_hopf(p, 2);
    FAIL("expected OrderConstraintViolated");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::OrderConstraintViolated);
  }
  CHECK(build_hom_lie_hopf(p, 2, 3, SemidualConfig{false}).matched.passed());
}

TEST_CASE("matched iff mutual, equation by equation") {
  CHECK(check_mutual_pair(semidualize(finite_matched_pair())).passed());
  std::vector<std::pair<std::string, std::string>> const partner = {
      {"v-rt-uu'", "comp-III"}, {"vv'-lt-u", "comp-I"}, {"v-lt-u-ot-v-rt-u-switch", "comp-IV"}};
  for (int i = 0; i < 3; ++i) {
    CAPTURE(i);
    MatchedPairHopf const p = perturbed_pair(i);
    CheckReport const matched = check_matched_pair_hopf(p);
    CheckReport const mutual = check_mutual_pair(semidualize(p));
    CHECK_FALSE(matched.passed());
    CHECK_FALSE(mutual.passed());
    for (auto const& [a, b] : partner) CHECK(matched.failed(a) == mutual.failed(b));
  }
}

TEST_CASE("Fixture B end to end") {
  HomLieHopfResult const r = build_hom_lie_hopf(fixture_b(), 3);
  CHECK(r.passed());
  CHECK(r.dims_g == std::vector<int>{1, 1, 1, 1});
  CHECK(r.bicrossproduct.dim() == 16);
}
