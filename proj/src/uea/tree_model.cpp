#include "homhopf/tree_model.hpp"

#include "homhopf/error.hpp"

namespace homhopf {

TreeModel::TreeModel(HomLie g) : g_(std::move(g)) {
  validate(g_);
  if (!g_.phi.is_invertible()) throw Error(Errc::NotInvertible, "phi must be invertible");
}

LinearOperator const& TreeModel::phi_power(int k) const {
  auto it = powers_.find(k);
  if (it == powers_.end()) it = powers_.emplace(k, g_.phi.power(k)).first;
  return it->second;
}

TreeComb TreeModel::graft(Tree const& a, Tree const& b) const {
  if (a.is_unit() && b.is_unit()) return TreeComb(a);
  if (b.is_unit()) return twist(a);
  if (a.is_unit()) return twist(b);
  return TreeComb(Tree::join(a, b));
}

TreeComb TreeModel::graft(TreeComb const& a, TreeComb const& b) const {
  TreeComb out;
  for (auto const& [x, c] : a)
    for (auto const& [y, d] : b) out.add_scaled(graft(x, y), c * d);
  return out;
}

TreeComb TreeModel::twist(Tree const& t, int k) const {
  if (t.is_unit() || k == 0) return TreeComb(t);
  LinearOperator const& p = phi_power(k);
  auto const labels = t.labels();
  // Expand multilinearly in the decorations.
  std::vector<std::pair<std::vector<Tree::Label>, Rational>> partial{{{}, Rational(1)}};
  for (auto const& l : labels) {
    std::vector<std::pair<std::vector<Tree::Label>, Rational>> next;
    for (auto const& [ls, c] : partial)
      for (auto const& [d, x] : p(l.deco)) {
        auto ext = ls;
        ext.push_back({l.weight, d});
        next.push_back({std::move(ext), c * x});
      }
    partial = std::move(next);
  }
  TreeComb out;
  for (auto const& [ls, c] : partial) out.add(t.relabel(ls), c);
  return out;
}

TreeComb TreeModel::twist(TreeComb const& t, int k) const {
  return t.map_linear([&](Tree const& x) { return twist(x, k); });
}

TreePairComb const& TreeModel::coproduct(Tree const& t) const {
  auto it = coproducts_.find(t);
  if (it != coproducts_.end()) return it->second;
  TreePairComb out;
  if (t.is_unit()) {
    out.add({t, t}, 1);
  } else if (t.is_leaf()) {
    out.add({t, Tree()}, 1);
    out.add({Tree(), t}, 1);
  } else {
    TreePairComb const dl = coproduct(t.left());
    TreePairComb const dr = coproduct(t.right());
    for (auto const& [l, a] : dl)
      for (auto const& [r, b] : dr) {
        TreeComb const first = graft(l.first, r.first);
        TreeComb const second = graft(l.second, r.second);
        for (auto const& [x, c] : first)
          for (auto const& [y, d] : second) out.add({x, y}, a * b * c * d);
      }
  }
  return coproducts_.emplace(t, std::move(out)).first->second;
}

TreePairComb TreeModel::coproduct(TreeComb const& t) const {
  TreePairComb out;
  for (auto const& [x, c] : t) out.add_scaled(coproduct(x), c);
  return out;
}

Rational TreeModel::counit(TreeComb const& t) const { return t.coeff(Tree()); }

TreeComb TreeModel::antipode(Tree const& t) const {
  if (t.is_unit()) return TreeComb(t);
  if (t.is_leaf()) return TreeComb(t, -1);
  return graft(antipode(t.right()), antipode(t.left()));
}

TreeComb TreeModel::antipode(TreeComb const& t) const {
  return t.map_linear([&](Tree const& x) { return antipode(x); });
}

TreeComb TreeModel::leaves_of(Vec const& xi, int weight) {
  TreeComb out;
  for (auto const& [d, c] : xi) out.add(Tree::leaf(weight, d), c);
  return out;
}

Vec TreeModel::leaf_value(TreeComb const& t) const {
  Vec out;
  for (auto const& [x, c] : t) {
    if (!x.is_leaf()) throw Error(Errc::SchemaError, "expected a combination of single leaves");
    out.add_scaled(phi_power(x.label().weight)(x.label().deco), c);
  }
  return out;
}

}  // namespace homhopf
