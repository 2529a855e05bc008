#pragma once

#include "homhopf/cross_products.hpp"
#include "homhopf/semidual.hpp"

#include <vector>

namespace fixtures {

using namespace homhopf;

// Group algebra of a finite group given by its multiplication table on
// indices, with identity 0.
inline HomHopf group_algebra(std::vector<std::vector<int>> const& table) {
  int const n = static_cast<int>(table.size());
  HomHopf h;
  h.alg.dim = n;
  h.coalg.dim = n;
  std::vector<Vec> inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      h.alg.table.push_back(Vec(table[i][j]));
      if (table[i][j] == 0) inv[i] = Vec(j);
    }
  h.alg.unit = Vec(0);
  h.alg.alpha = LinearOperator::identity(n);
  for (int i = 0; i < n; ++i) {
    h.coalg.comult.push_back(Tensor(Index{i, i}));
    h.coalg.counit.push_back(1);
  }
  h.coalg.beta = LinearOperator::identity(n);
  h.antipode = LinearOperator(inv);
  return h;
}

inline HomHopf cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return group_algebra(t);
}

// S3 as permutations of {0, 1, 2}; index 0 is the identity.
inline HomHopf symmetric3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto const find = [&](std::vector<int> const& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> c(3);
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = find(c);
    }
  return group_algebra(t);
}

// g^k -> g^-k on k[Z/n].
inline LinearOperator inversion(int n) {
  std::vector<Vec> cols;
  for (int k = 0; k < n; ++k) cols.push_back(Vec((n - k) % n));
  return LinearOperator(cols);
}

// Sweedler's four-dimensional algebra on 1, g, x, gx.
inline HomHopf sweedler() {
  HomHopf h;
  h.alg.dim = 4;
  h.coalg.dim = 4;
  h.alg.table.assign(16, Vec{});
  auto const set = [&](int i, int j, int k, int c) { h.alg.table[i * 4 + j] = Vec(k, c); };
  for (int j = 0; j < 4; ++j) set(0, j, j, 1);
  set(1, 0, 1, 1), set(1, 1, 0, 1), set(1, 2, 3, 1), set(1, 3, 2, 1);
  set(2, 0, 2, 1), set(2, 1, 3, -1);
  set(3, 0, 3, 1), set(3, 1, 2, -1);
  h.alg.unit = Vec(0);
  h.alg.alpha = LinearOperator::identity(4);
  h.coalg.comult = {Tensor(Index{0, 0}), Tensor(Index{1, 1}), Tensor{{Index{2, 0}, 1}, {Index{1, 2}, 1}},
                    Tensor{{Index{3, 1}, 1}, {Index{0, 3}, 1}}};
  h.coalg.counit = {1, 1, 0, 0};
  h.coalg.beta = LinearOperator::identity(4);
  h.antipode = LinearOperator({Vec(0), Vec(1), Vec(3, -1), Vec(2)});
  return h;
}

// x -> -x on Sweedler's algebra.
inline LinearOperator sweedler_sign() {
  return LinearOperator({Vec(0), Vec(1), Vec(2, -1), Vec(3, -1)});
}

inline HomHopf kz4_twist() { return hopf_twist(cyclic(4), inversion(4), inversion(4)); }

// U = Sweedler with twists (x -> -x, x -> -x), V = k[Z/4] with twists
// (inversion, Id); both satisfy the order constraints.  Trivial actions.
inline MatchedPairHopf finite_matched_pair() {
  MatchedPairHopf p;
  p.u = hopf_twist(sweedler(), sweedler_sign(), sweedler_sign());
  p.v = hopf_twist(cyclic(4), inversion(4), LinearOperator::identity(4));
  p.left = trivial_action(Side::Left, p.v, p.u.alg.alpha);
  p.right = trivial_action(Side::Right, p.u, p.v.alg.alpha);
  return p;
}

// Three independent perturbations of the finite pair.
inline MatchedPairHopf perturbed_pair(int which) {
  MatchedPairHopf p = finite_matched_pair();
  if (which == 0) *p.left.table[1 * 4 + 2] *= Rational(2);  // g ▷ x scaled
  if (which == 1) p.right.table[2 * 4 + 1] = Vec(1);          // g ◁ x = g
  if (which == 2) p.left.table[1 * 4 + 1]->add(2, 1);         // g ▷ g gains an x term
  return p;
}

// The trivial mutual pair on F = k[Z/4] twisted by inversion and U = the
// twisted Sweedler algebra.
inline MutualPairHopf finite_mutual_pair() {
  MutualPairHopf m;
  m.f = kz4_twist();
  m.u = hopf_twist(sweedler(), sweedler_sign(), sweedler_sign());
  m.action = trivial_action(Side::Left, m.u, m.f.coalg.beta);
  m.coaction = trivial_coaction(m.f, m.u.alg.alpha);
  return m;
}

// g = <y>, h = <x>, identity twists, x ▷ y = y and trivial ◁.
inline MatchedPairLie fixture_b() {
  MatchedPairLie p;
  p.g = abelian_hom_lie(1, LinearOperator::identity(1));
  p.h = abelian_hom_lie(1, LinearOperator::identity(1));
  p.left = LieAction{Side::Left, 1, 1, {Vec(0)}, p.g.phi};
  p.right = LieAction{Side::Right, 1, 1, {Vec{}}, p.h.phi};
  return p;
}

// One-dimensional abelian g and h with phi = alpha = -Id and trivial actions.
inline MatchedPairLie fixture_a_prime() {
  MatchedPairLie p;
  p.g = abelian_hom_lie(1, LinearOperator::scalar(1, -1));
  p.h = abelian_hom_lie(1, LinearOperator::scalar(1, -1));
  p.left = trivial_lie_action(Side::Left, 1, p.g.phi);
  p.right = trivial_lie_action(Side::Right, 1, p.h.phi);
  return p;
}

inline bool same_tables(HomHopf const& a, HomHopf const& b) {
  return a.alg.table == b.alg.table && a.alg.unit == b.alg.unit && a.alg.alpha == b.alg.alpha &&
         a.coalg.comult == b.coalg.comult && a.coalg.counit == b.coalg.counit && a.coalg.beta == b.coalg.beta &&
         a.antipode == b.antipode;
}

}  // namespace fixtures
