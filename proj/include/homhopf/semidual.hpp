#pragma once

#include "homhopf/cross_products.hpp"
#include "homhopf/hom_lie.hpp"

#include <vector>

namespace homhopf {

struct SemidualConfig {
  // Require alpha^4 beta^-2 = Id and phi^4 psi^-2 = Id before dualizing.
  bool enforce_order = true;
};

// u0 <u1, v> = phi^-2(v) ▷ u for a left action of V on U, with phi the
// algebra twist of V.  The coaction lands in U ⊗ V* on the dual basis of V
// and carries the action's structure map as theta.
CoactionData coaction_from_action(HomHopf const& v, ActionData const& action);

// <u ▷ f, v> = <f, gamma^-2(v) ◁ phi^-2(u)> for a right action of U on V,
// with phi the algebra twist of U.  The result acts on V* with structure map
// (gamma^-1)*.  Throws NotInvertibleGamma.
ActionData dual_left_action_from_right_action(HomHopf const& u, ActionData const& right);

// (U, V) -> (V°, U) with V° = dual_hom_hopf(V).  Throws
// OrderConstraintViolated when enforced and the twists do not satisfy the
// order constraints.
MutualPairHopf semidualize(MatchedPairHopf const& p, SemidualConfig const& cfg = {});
bool order_constraints_hold(MatchedPairHopf const& p);

struct HomLieHopfResult {
  std::vector<int> dims_g;
  std::vector<int> dims_h;
  CheckReport lie;           // the Lie-level matched pair
  CheckReport well_defined;  // lifted actions respect the defining ideals
  CheckReport matched;       // (U(g), U(h)) as a matched pair of Hom-Hopf algebras
  CheckReport mutual;        // (U(h)°, U(g)) as a mutual pair
  CheckReport bicross;       // Hom-Hopf suite on U(h)° ▷◁ U(g)
  MatchedPairHopf matched_pair;
  MutualPairHopf mutual_pair;
  HomHopf bicrossproduct;

  bool passed() const;
};

// Truncates both enveloping algebras at degree n, lifts the actions,
// semidualizes and builds the bicrossproduct.  Requires phi^4 = Id on g and
// alpha^4 = Id on h when the order constraint is enforced.  Throws
// NotMatchedPair when the lifted pair fails.
HomLieHopfResult build_hom_lie_hopf(MatchedPairLie const& p, int n, int weight_bound = 3,
                                    SemidualConfig const& cfg = {});

}  // namespace homhopf
