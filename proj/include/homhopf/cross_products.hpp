#pragma once

#include "homhopf/hom_core.hpp"

namespace homhopf {

// Symmetry checkers.  The acting (co)algebra is a Hom-bialgebra; the carrier
// is described by its own Hom-(co)algebra.  Left actions read (h, a), right
// actions (a, h).
CheckReport check_module_algebra(HomBialgebra const& h, HomAlgebra const& a, ActionData const& m,
                                 Grading const* carrier_g = nullptr);
CheckReport check_module_coalgebra(HomBialgebra const& h, HomCoalgebra const& c, ActionData const& m,
                                   Grading const* carrier_g = nullptr);
CheckReport check_comodule_algebra(HomBialgebra const& h, HomAlgebra const& a, CoactionData const& m,
                                   Grading const* carrier_g = nullptr);
CheckReport check_comodule_coalgebra(HomBialgebra const& h, HomCoalgebra const& c, CoactionData const& m,
                                     Grading const* carrier_g = nullptr);

// U with twists (phi, psi), V with twists (alpha, beta).
struct MatchedPairHopf {
  HomHopf u;
  HomHopf v;
  ActionData left;   // V ⊗ U -> U, gamma = phi
  ActionData right;  // V ⊗ U -> V, gamma = alpha
};

CheckReport check_matched_pair_hopf(MatchedPairHopf const& p);

// U ⊗ V with basis u * dim V + v, twists (phi ⊗ alpha, psi ⊗ beta).  Throws
// NotMatchedPair unless the pair passes (skipped when verify is false).
HomHopf build_double_cross_product(MatchedPairHopf const& p, bool verify = true);

// F with twists (alpha, beta), U with twists (phi, psi).
struct MutualPairHopf {
  HomHopf f;
  HomHopf u;
  ActionData action;      // U ⊗ F -> F, gamma = beta of F
  CoactionData coaction;  // U -> U ⊗ F, theta = phi
};

CheckReport check_mutual_pair(MutualPairHopf const& m);

// F ⊗ U with basis f * dim U + u, twists (beta ⊗ phi, alpha ⊗ psi).  Throws
// NotMutualPair unless the pair passes (skipped when verify is false).
HomHopf build_bicrossproduct(MutualPairHopf const& m, bool verify = true);

// Trivial structures: h ▷ x = epsilon(h) gamma(x), x ↦ theta(x) ⊗ 1.
ActionData trivial_action(Side side, HomBialgebra const& acting, LinearOperator gamma);
CoactionData trivial_coaction(HomBialgebra const& coacting, LinearOperator theta);

// A ⊗ B on the product basis a * dim B + b.
LinearOperator kron(LinearOperator const& a, LinearOperator const& b);

}  // namespace homhopf
