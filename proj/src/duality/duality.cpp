#include "homhopf/duality.hpp"

#include "homhopf/error.hpp"

#include <algorithm>

namespace homhopf {

HomAlgebra dual_algebra_of_coalgebra(HomCoalgebra const& c) {
  int const n = c.dim;
  LinearOperator const bm2 = c.beta.power(-2);
  HomAlgebra out;
  out.dim = n;
  out.table.assign(static_cast<std::size_t>(n) * n, Vec{});
  for (int k = 0; k < n; ++k) {
    Tensor const d = op_at(op_at(c.comult[k], 0, bm2), 1, bm2);
    for (auto const& [key, x] : d) out.table[static_cast<std::size_t>(key[0]) * n + key[1]]->add(k, x);
  }
  for (int k = 0; k < n; ++k) out.unit.add(k, c.counit[k]);
  out.alpha = c.beta.inverse().transpose();
  return out;
}

HomCoalgebra dual_coalgebra_of_algebra(HomAlgebra const& a) {
  int const n = a.dim;
  LinearOperator const am2 = a.alpha.power(-2);
  HomCoalgebra out;
  out.dim = n;
  out.comult.assign(n, Tensor{});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto const& e = a.table[static_cast<std::size_t>(i) * n + j];
      if (!e) continue;
      for (auto const& [k, x] : am2(*e)) out.comult[k].add(Index{i, j}, x);
    }
  out.counit.assign(n, 0);
  for (auto const& [k, x] : a.unit) out.counit[k] = x;
  out.beta = a.alpha.inverse().transpose();
  return out;
}

HomHopf dual_hom_hopf(HomHopf const& h) {
  HomHopf d;
  d.alg = dual_algebra_of_coalgebra(h.coalg);
  d.coalg = dual_coalgebra_of_algebra(h.alg);
  d.antipode = h.antipode.transpose();
  d.grading.degree = h.grading.dual_degree;
  d.grading.dual_degree = h.grading.degree;
  d.grading.bound = h.grading.bound;
  return d;
}

GradedDual graded_dual(HomHopf const& truncated) {
  if (truncated.grading.degree.empty() || truncated.grading.bound < 0)
    throw Error(Errc::SchemaError, "graded_dual needs a truncated algebra with degrees");
  GradedDual g;
  g.dims.assign(truncated.grading.bound + 1, 0);
  for (int d : truncated.grading.degree) ++g.dims.at(d);
  g.dual = dual_hom_hopf(truncated);
  return g;
}

namespace {

ActionData coregular(HomAlgebra const& a, Side side) {
  int const n = a.dim;
  LinearOperator const am2 = a.alpha.power(-2);
  ActionData m;
  m.side = side;
  m.acting_dim = n;
  m.carrier_dim = n;
  m.gamma = a.alpha.inverse().transpose();
  m.table.assign(static_cast<std::size_t>(n) * n, Vec{});
  // (e_i acting on f_k)(e_j) is the e_k-coefficient of alpha^-2(e_j e_i) or alpha^-2(e_i e_j).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto const& e = side == Side::Left ? a.table[static_cast<std::size_t>(j) * n + i]
                                         : a.table[static_cast<std::size_t>(i) * n + j];
      if (!e) {
        for (int k = 0; k < n; ++k) m.table[static_cast<std::size_t>(i) * n + k].reset();
        continue;
      }
      for (auto const& [k, x] : am2(*e)) {
        auto& slot = m.table[static_cast<std::size_t>(i) * n + k];
        if (slot) slot->add(j, x);
      }
    }
  return m;
}

}  // namespace

ActionData coregular_left(HomAlgebra const& a) { return coregular(a, Side::Left); }
ActionData coregular_right(HomAlgebra const& a) { return coregular(a, Side::Right); }

Rational pairing(Vec const& functional, Vec const& v) {
  Rational r = 0;
  for (auto const& [i, x] : functional) r += x * v.coeff(i);
  return r;
}

}  // namespace homhopf
