#include "fixtures.hpp"
#include "oracles.hpp"

#include "homhopf/lifted_actions.hpp"

#include <doctest.h>

using namespace homhopf;
using namespace fixtures;

TEST_CASE("tree shapes are counted by Catalan numbers") {
  std::vector<std::size_t> const catalan = {1, 1, 2, 5, 14};
  for (int n = 1; n <= 5; ++n) CHECK(tree_shapes(n).size() == catalan[n - 1]);
  CHECK_THROWS_AS(Tree::from_code({-1, 0, 0}), Error);
  Tree const t = Tree::join(Tree::leaf(0, 0), Tree::leaf(1, 1));
  CHECK(Tree::from_code(t.code()) == t);
  CHECK(t.leaves() == 2);
  CHECK(t.weight() == 1);
}

TEST_CASE("grafting with the unit twists the other factor") {
  TreeModel const m(oracles::nonabelian_twisted());
  Tree const y = Tree::leaf(0, 1);
  CHECK(m.graft(Tree(), Tree()) == TreeComb(Tree()));
  CHECK(m.graft(y, Tree()) == m.twist(y));
  CHECK(m.twist(y) == TreeComb(y, -1));
  CHECK(m.counit(m.antipode(TreeComb(y))) == 0);
}

TEST_CASE("truncated dimensions follow the symmetric algebra") {
  for (int dim : {1, 2, 3}) {
    TruncatedUEA const u(abelian_hom_lie(dim, LinearOperator::identity(dim)), 3);
    CHECK(u.dims() == oracles::symmetric_algebra_dims(dim, 3));
  }
  TruncatedUEA const v(abelian_hom_lie(1, LinearOperator::scalar(1, -1)), 4);
  CHECK(v.dims() == oracles::symmetric_algebra_dims(1, 4));
  TruncatedUEA const w(oracles::nonabelian_twisted(), 3, 1);
  CHECK(w.dims() == oracles::symmetric_algebra_dims(2, 3));
}

TEST_CASE("truncated algebras pass the Hom-Hopf suite and close their ideal") {
  TruncatedUEA const u(oracles::nonabelian_twisted(), 3, 1);
  CHECK(check_hom_hopf(u.hopf()).passed());
  CHECK(check_ideal_membership(u).passed());
  CHECK(check_tree_coassociativity(u.model(), 3, 1).passed());
}

namespace {

int index_of_degree(TruncatedUEA const& u, int d) {
  auto const& deg = u.hopf().grading.degree;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == d) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("lifted derivation action: x^m acts on y^n by n^m") {
  MatchedPairLie const p = fixture_b();
  int const n = 4;
  TruncatedUEA const ug(p.g, n), uh(p.h, n);
  LiftedActions const l(p, ug, uh);
  CHECK(l.check_well_defined().passed());
  ActionData const left = l.left_action();
  for (int m = 0; m <= n; ++m)
    for (int k = 0; k <= n; ++k) {
      int const xm = index_of_degree(uh, m), yk = index_of_degree(ug, k);
      REQUIRE(left.table[xm * left.carrier_dim + yk]);
      // normal forms are scalar multiples of y^k, and x ▷ (y ∨ y) = 2 y ∨ y
      CHECK(*left.table[xm * left.carrier_dim + yk] == Vec(yk, oracles::ipow(k, m)));
    }
  ActionData const right = l.right_action();
  for (int m = 1; m <= n; ++m) CHECK(right.act(index_of_degree(ug, 1), index_of_degree(uh, m)).empty());
}
