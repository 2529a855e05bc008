#pragma once

#include "homhopf/hom_lie.hpp"
#include "homhopf/tree.hpp"

#include <map>
#include <memory>

namespace homhopf {

// The free Hom-Hopf algebra of decorated weighted trees over (g, phi): the
// grafting product with the unit conventions, the decorated twist (phi on
// every decoration), the leaf-splitting coproduct, counit and antipode.
class TreeModel {
 public:
  explicit TreeModel(HomLie g);

  HomLie const& lie() const { return g_; }

  // 1 v 1 = 1, t v 1 = 1 v t = twist(t), otherwise the plain root join.
  TreeComb graft(Tree const& a, Tree const& b) const;
  TreeComb graft(TreeComb const& a, TreeComb const& b) const;

  // Decorated twist applied k times (k < 0 uses phi^-1); weights unchanged.
  TreeComb twist(Tree const& t, int k = 1) const;
  TreeComb twist(TreeComb const& t, int k = 1) const;

  // Undecorated twist: every weight + 1.  Appears only in the
  // Hom-associativity generators.
  static Tree shift(Tree const& t) { return t.is_unit() ? t : t.with_weights_shifted(1); }

  // Sum over splittings of the leaf set; weights travel with their leaves.
  TreePairComb const& coproduct(Tree const& t) const;
  TreePairComb coproduct(TreeComb const& t) const;
  static Rational counit(Tree const& t) { return t.is_unit() ? 1 : 0; }
  Rational counit(TreeComb const& t) const;
  TreeComb antipode(Tree const& t) const;
  TreeComb antipode(TreeComb const& t) const;

  // Weight-0 leaves carrying a g-vector.
  static TreeComb leaves_of(Vec const& xi, int weight = 0);
  // Reads a combination of single leaves back as a g-vector, folding each
  // weight s through phi^s.
  Vec leaf_value(TreeComb const& t) const;

  LinearOperator const& phi_power(int k) const;

 private:
  HomLie g_;
  mutable std::map<int, LinearOperator> powers_;
  mutable std::map<Tree, TreePairComb> coproducts_;
};

}  // namespace homhopf
