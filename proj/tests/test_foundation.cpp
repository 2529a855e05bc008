#include "homhopf/dense.hpp"
#include "homhopf/echelon.hpp"
#include "homhopf/error.hpp"
#include "homhopf/linear_operator.hpp"
#include "homhopf/tensor.hpp"

#include <doctest.h>

using namespace homhopf;

TEST_CASE("rationals print as p/q and parse back") {
  CHECK(to_string(Rational(3)) == "3/1");
  Rational q(-6, 4);
  q.canonicalize();
  CHECK(to_string(q) == "-3/2");
  CHECK(parse_rational(" -3/2 ") == Rational(-3, 2));
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("linear combinations drop zero coefficients") {
  Vec v{{0, 1}, {2, 3}};
  v.add(2, -3);
  CHECK(v.size() == 1);
  CHECK((v - v).empty());
  CHECK(Rational(2) * v == Vec(0, 2));
  CHECK(v.coeff(5) == 0);
}

TEST_CASE("operators: inverse, power, transpose") {
  // rotation by 90 degrees has order 4
  LinearOperator const r({Vec(1), Vec(0, -1)});
  CHECK(r.power(4).is_identity());
  CHECK_FALSE(r.power(2).is_identity());
  CHECK(r.inverse() == r.power(3));
  CHECK(r.power(-1).compose(r).is_identity());
  CHECK(r.transpose() == r.inverse());
  LinearOperator const singular({Vec(0), Vec(0)});
  CHECK_FALSE(singular.is_invertible());
  CHECK_THROWS_AS(singular.inverse(), Error);
  CHECK_THROWS_AS(LinearOperator::with_inverse({Vec(0), Vec(1)}, {Vec(1), Vec(0)}), Error);
  CHECK_THROWS_AS(LinearOperator({Vec(3)}), Error);
}

TEST_CASE("dense elimination") {
  DenseMatrix const m = {{2, 1}, {1, 1}};
  auto const inv = dense_inverse(m);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == 1);
  CHECK((*inv)[0][1] == -1);
  CHECK((*inv)[1][1] == 2);
  CHECK(dense_rank({{1, 2}, {2, 4}}) == 1);
  auto const s = solve_linear({{1, 1}, {1, -1}}, {3, 1});
  REQUIRE(s.unique());
  CHECK((*s.particular)[0] == 2);
  CHECK_FALSE(solve_linear({{1, 1}, {1, 1}}, {1, 2}).particular);
}

TEST_CASE("echelon form reduces to a canonical representative") {
  Echelon<int> e;
  CHECK(e.insert(Vec{{0, 1}, {1, 1}}));
  CHECK(e.insert(Vec{{1, 1}, {2, 1}}));
  CHECK_FALSE(e.insert(Vec{{0, 1}, {2, -1}}));
  CHECK(e.rank() == 2);
  CHECK(e.contains(Vec{{0, 2}, {2, -2}}));
  // e0 = -e1 = e2 modulo the span
  CHECK(e.reduce(Vec(0)) == Vec(2));
  CHECK(e.basis().size() == 2);
}

TEST_CASE("tensor engine: permute, flatten and slot maps") {
  Tensor const t{{Index{0, 1, 2}, 2}};
  CHECK(permute(t, {2, 0, 1}) == Tensor{{Index{2, 0, 1}, 2}});
  Tensor const f = flatten_pair(t, 1, 3);
  CHECK(f == Tensor{{Index{0, 5}, 2}});
  CHECK(unflatten_slot(f, 1, 3) == t);
  Tensor const m = map_slot(t, 0, [](int i) { return Vec{{i, 1}, {i + 1, 1}}; });
  CHECK(m.size() == 2);
  CHECK(insert_slot(t, 3, Vec(7)) == Tensor{{Index{0, 1, 2, 7}, 2}});
  CHECK(contract_slot(t, 1, [](int) { return Rational(5); }) == Tensor{{Index{0, 2}, 10}});
}
