#pragma once

#include "homhopf/hom_structures.hpp"

#include <vector>

namespace homhopf {

// (g, [ , ], phi) in a fixed basis; bracket[i * dim + j] = [e_i, e_j].
struct HomLie {
  int dim = 0;
  std::vector<Vec> bracket;
  LinearOperator phi;

  Vec br(int i, int j) const { return bracket.at(static_cast<std::size_t>(i) * dim + j); }
  Vec br(Vec const& x, Vec const& y) const;
};

HomLie abelian_hom_lie(int dim, LinearOperator phi);
void validate(HomLie const& g);

// Antisymmetry, the cyclic Hom-Jacobi sum and multiplicativity of phi.
CheckReport check_hom_lie(HomLie const& g);

// (g, t[ , ], t) for a Lie algebra endomorphism t; throws NotLieEndomorphism.
HomLie lie_twist(HomLie const& classical, LinearOperator const& t);

// [x, y] = x y - y x with phi = alpha.
HomLie commutator_hom_lie(HomAlgebra const& a);

// Action of a Hom-Lie algebra on a vector space with structure map gamma.
// Left actions read (acting, carrier), right actions (carrier, acting).
struct LieAction {
  Side side = Side::Left;
  int acting_dim = 0;
  int carrier_dim = 0;
  std::vector<Vec> table;  // [acting * carrier_dim + carrier]
  LinearOperator gamma;

  Vec act(int acting, int carrier) const {
    return table.at(static_cast<std::size_t>(acting) * carrier_dim + carrier);
  }
  Vec act(Vec const& acting, Vec const& carrier) const;
};

LieAction trivial_lie_action(Side side, int acting_dim, LinearOperator gamma);
CheckReport check_lie_module(LieAction const& m, HomLie const& acting);

// h acts on g from the left (gamma = phi of g) and g acts on h from the right
// (gamma = phi of h, written alpha).
struct MatchedPairLie {
  HomLie g;
  HomLie h;
  LieAction left;   // h ⊗ g -> g
  LieAction right;  // h ⊗ g -> h
};

CheckReport check_matched_pair_lie(MatchedPairLie const& p);

// g ⊕ h with the bicrossed bracket and twist phi ⊕ alpha; basis g first.
// Throws NotMatchedPair when the pair fails its checks.
HomLie bicrossed_sum(MatchedPairLie const& p);

Tensor bracket_at(Tensor const& t, std::size_t pos, HomLie const& g);
Tensor lie_act_at(Tensor const& t, std::size_t pos, LieAction const& m);

}  // namespace homhopf
