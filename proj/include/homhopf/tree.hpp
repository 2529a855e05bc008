#pragma once

#include "homhopf/lincomb.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace homhopf {

// Planar binary tree with weighted, decorated leaves, or the external unit.
// Stored as a preorder code: an internal node is -1 followed by its two
// subtrees, a leaf is the pair (weight, decoration).  The unit has an empty
// code.  Trees compare by leaf count, then total weight, then code.
class Tree {
 public:
  struct Label {
    int weight = 0;
    int deco = 0;
    friend bool operator==(Label const&, Label const&) = default;
  };

  Tree() = default;
  static Tree leaf(int weight, int deco);
  static Tree join(Tree const& l, Tree const& r);  // plain root join; both must be non-unit
  // Validates a preorder code; throws Error(SchemaError) on malformed input.
  static Tree from_code(std::vector<int> code);

  bool is_unit() const { return code_.empty(); }
  bool is_leaf() const { return code_.size() == 2; }
  int leaves() const { return leaves_; }
  int weight() const { return weight_; }
  std::vector<int> const& code() const { return code_; }

  Tree left() const;
  Tree right() const;
  Label label() const { return {code_[0], code_[1]}; }  // leaves only
  std::vector<Label> labels() const;
  Tree relabel(std::vector<Label> const& labels) const;
  Tree with_weights_shifted(int by) const;

  // "(a v b)" with leaves printed as decoration, or decoration^weight.
  std::string str() const;

  friend bool operator==(Tree const& a, Tree const& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(Tree const& a, Tree const& b) {
    if (auto c = a.leaves_ <=> b.leaves_; c != 0) return c;
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  std::vector<int> code_;
  int leaves_ = 0;
  int weight_ = 0;
};

// Pivot order for quotients: trees with more leaves, then more weight, come
// first, so normal forms are the lightest available representatives.
struct EliminationOrder {
  bool operator()(Tree const& a, Tree const& b) const {
    if (a.leaves() != b.leaves()) return a.leaves() > b.leaves();
    if (a.weight() != b.weight()) return a.weight() > b.weight();
    return a.code() < b.code();
  }
};

using TreeComb = LinComb<Tree>;
using TreePairComb = LinComb<std::pair<Tree, Tree>>;

// All planar binary shapes with n leaves, every leaf labelled (0, 0).
std::vector<Tree> tree_shapes(int n);

// Fills a context: the code of `context` contains exactly one hole marker
// kHole in place of a leaf.
inline constexpr int kHole = -2;
Tree substitute(std::vector<int> const& context, Tree const& t);

}  // namespace homhopf
