#pragma once

// Independent reference values computed from classical formulas, without
// going through trees, quotients or the tensor engine.
#include "homhopf/hom_core.hpp"
#include "homhopf/hom_lie.hpp"

#include <optional>
#include <vector>

namespace oracles {

using namespace homhopf;

inline Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Rational ipow(int base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Monomials of degree d in `dim` commuting variables, d = 0..n.
inline std::vector<int> symmetric_algebra_dims(int dim, int n) {
  std::vector<int> out;
  for (int d = 0; d <= n; ++d) out.push_back(static_cast<int>(binom(d + dim - 1, d).get_num().get_si()));
  return out;
}

// [e0, e1] = e1 twisted by diag(1, -1).
inline HomLie nonabelian_twisted() {
  HomLie g;
  g.dim = 2;
  g.bracket = {Vec{}, Vec(1), Vec(1, -1), Vec{}};
  g.phi = LinearOperator::identity(2);
  return lie_twist(g, LinearOperator({Vec(0), Vec(1, -1)}));
}

// U(<x>)° ▷◁ U(<y>) for x ▷ y = y, trivial ◁, truncated at degree n, on the
// basis (f_a, y^k) -> a * (n + 1) + k.  Classically
//   y^k ▷ f = epsilon(y^k) f,  coaction y^k -> sum_m k^m y^k ⊗ f_m,
//   f_a f_b = C(a + b, a) f_(a+b),  Delta f_a = sum f_i ⊗ f_(a-i).
inline HomHopf classical_bicross_b(int n) {
  int const s = n + 1;
  int const dim = s * s;
  auto const idx = [&](int a, int k) { return a * s + k; };
  HomHopf h;
  h.alg.dim = dim;
  h.coalg.dim = dim;
  h.alg.table.resize(static_cast<std::size_t>(dim) * dim);
  for (int a = 0; a <= n; ++a)
    for (int k = 0; k <= n; ++k)
      for (int b = 0; b <= n; ++b)
        for (int m = 0; m <= n; ++m) {
          auto& e = h.alg.table[static_cast<std::size_t>(idx(a, k)) * dim + idx(b, m)];
          if (k + m > n) continue;
          e = Vec{};
          if (a + b <= n) e->add(idx(a + b, k + m), binom(a + b, a));
        }
  h.alg.unit = Vec(0);
  h.alg.alpha = LinearOperator::identity(dim);
  for (int a = 0; a <= n; ++a)
    for (int k = 0; k <= n; ++k) {
      Tensor t;
      for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= k; ++j)
          for (int m = 0; a - i + m <= n; ++m)
            t.add(Index{idx(i, j), idx(a - i + m, k - j)}, binom(k, j) * ipow(j, m) * binom(a - i + m, a - i));
      h.coalg.comult.push_back(t);
      h.coalg.counit.push_back(a == 0 && k == 0 ? 1 : 0);
    }
  h.coalg.beta = LinearOperator::identity(dim);
  std::vector<Vec> cols;
  for (int a = 0; a <= n; ++a)
    for (int k = 0; k <= n; ++k) {
      Vec c;
      for (int m = 0; a + m <= n; ++m)
        c.add(idx(a + m, k), ipow(k, m) * ((k + a + m) % 2 ? -1 : 1) * binom(a + m, a));
      cols.push_back(c);
    }
  h.antipode = LinearOperator(cols);
  return h;
}

}  // namespace oracles
