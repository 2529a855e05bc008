#pragma once

#include "homhopf/truncated_uea.hpp"

#include <map>
#include <utility>

namespace homhopf {

// The actions of a matched pair (g, h) of Hom-Lie algebras lifted to the
// enveloping algebras.  Everything is evaluated on tree representatives and
// projected to normal forms at the end; check_well_defined() verifies that
// the result does not depend on the representative.
class LiftedActions {
 public:
  // Throws NotMatchedPair when the Lie-level pair fails its checks.
  LiftedActions(MatchedPairLie p, TruncatedUEA const& ug, TruncatedUEA const& uh);

  MatchedPairLie const& pair() const { return p_; }
  TruncatedUEA const& ug() const { return ug_; }
  TruncatedUEA const& uh() const { return uh_; }

  // eta ◁ t for a g-tree t.
  Vec act_U_on_h(Vec const& eta, TreeComb const& t) const;
  // eta ▷ t for a g-tree t.
  TreeComb act_h_on_U(Vec const& eta, TreeComb const& t) const;
  // Omega ▷ xi and Omega ◁ xi for an h-tree Omega.
  Vec act_Uh_on_g(TreeComb const& omega, Vec const& xi) const;
  TreeComb act_g_on_Uh(TreeComb const& omega, Vec const& xi) const;
  // Omega ▷ t (a g-tree) and Omega ◁ t (an h-tree).
  TreeComb left(TreeComb const& omega, TreeComb const& t) const;
  TreeComb right(TreeComb const& omega, TreeComb const& t) const;

  // U_N(h) ⊗ U_N(g) -> U_N(g) with gamma = phi, and U_N(h) ⊗ U_N(g) -> U_N(h)
  // with gamma = alpha, on normal-form bases.
  ActionData left_action() const;
  ActionData right_action() const;

  // Images of ideal elements stay in the ideal, for both actions and both
  // arguments, over every ideal basis vector in the window.
  CheckReport check_well_defined() const;

 private:
  using Key = std::pair<int, Tree>;
  using TreeKey = std::pair<Tree, Tree>;

  Vec rh(int eta, Tree const& t) const;
  TreeComb hg(int eta, Tree const& t) const;
  Vec hog(Tree const& omega, int xi) const;
  TreeComb rhg(Tree const& omega, int xi) const;
  TreeComb left(Tree const& omega, Tree const& t) const;
  TreeComb right(Tree const& omega, Tree const& t) const;

  MatchedPairLie p_;
  TruncatedUEA const& ug_;
  TruncatedUEA const& uh_;
  mutable std::map<Key, Vec> rh_;
  mutable std::map<Key, TreeComb> hg_;
  mutable std::map<std::pair<Tree, int>, Vec> hog_;
  mutable std::map<std::pair<Tree, int>, TreeComb> rhg_;
  mutable std::map<TreeKey, TreeComb> left_;
  mutable std::map<TreeKey, TreeComb> right_;
};

}  // namespace homhopf
