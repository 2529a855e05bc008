#pragma once

#include "homhopf/echelon.hpp"
#include "homhopf/hom_core.hpp"
#include "homhopf/tree_model.hpp"

#include <map>
#include <vector>

namespace homhopf {

// The universal enveloping Hom-Hopf algebra of (g, phi) up to degree N.
//
// The ambient space is spanned by the unit and all decorated trees with at
// most N leaves and leaf weights at most W.  The ideal is the span of every
// generator substituted into every grafting context that stays inside that
// window; normal forms are the trees that are not pivots of its echelon form.
class TruncatedUEA {
 public:
  TruncatedUEA(HomLie g, int degree_bound, int weight_bound = 3);

  TreeModel const& model() const { return model_; }
  HomLie const& lie() const { return model_.lie(); }
  int degree_bound() const { return n_; }
  int weight_bound() const { return w_; }

  std::vector<Tree> const& basis() const { return basis_; }
  std::vector<int> dims() const;
  int index_of(Tree const& t) const;
  bool in_budget(Tree const& t) const;
  // Every weighted tree was identified with weight-0 trees.
  bool weights_absorbed() const { return weights_absorbed_; }
  bool graded() const { return graded_; }

  // Normal form modulo the full ideal; throws TruncationOverflow when a tree
  // lies outside the window.
  TreeComb reduce(TreeComb const& v) const;
  Vec project(TreeComb const& v) const;
  TreeComb lift(Vec const& v) const;
  bool in_ideal(TreeComb const& v) const { return reduce(v).empty(); }
  // Normal form modulo the Hom-associativity ideal alone.
  TreeComb reduce_hom_assoc(TreeComb const& v) const;

  // Generators before substitution into contexts.
  std::vector<TreeComb> const& hom_assoc_generators() const { return gen_i_; }
  std::vector<TreeComb> const& hopf_ideal_generators() const { return gen_j_; }
  std::size_t ideal_rank() const { return full_.rank(); }
  std::vector<TreeComb> ideal_basis() const { return full_.basis(); }

  // Induced tables on normal forms; products past N are nullopt.
  HomHopf const& hopf() const { return hopf_; }

 private:
  void build_ideal();
  void build_tables();
  void check_budget(TreeComb const& v) const;

  TreeModel model_;
  int n_;
  int w_;
  bool graded_ = false;
  bool weights_absorbed_ = false;
  std::vector<TreeComb> gen_i_;
  std::vector<TreeComb> gen_j_;
  Echelon<Tree, EliminationOrder> hom_assoc_;
  Echelon<Tree, EliminationOrder> full_;
  std::vector<Tree> basis_;
  std::map<Tree, int> index_;
  HomHopf hopf_;
};

// Coideal, counit, antipode and twist closure of every generator, tested by
// membership in the computed ideal.  With strict set, coproducts of the
// Hom-associativity generators are tested against that ideal alone.
CheckReport check_ideal_membership(TruncatedUEA const& u, bool strict = false);

// (Delta ⊗ Id) Delta = (Id ⊗ Delta) Delta on every tree in the window.
CheckReport check_tree_coassociativity(TreeModel const& m, int degree_bound, int weight_bound);

}  // namespace homhopf
