#include "homhopf/tree.hpp"

#include "homhopf/error.hpp"

namespace homhopf {

namespace {

// End position of the subtree starting at pos.
std::size_t subtree_end(std::vector<int> const& code, std::size_t pos) {
  int need = 1;
  while (need > 0) {
    if (pos >= code.size()) throw Error(Errc::SchemaError, "truncated tree code");
    if (code[pos] == -1) {
      ++need;
      ++pos;
    } else {
      --need;
      pos += 2;
    }
  }
  return pos;
}

}  // namespace

Tree Tree::leaf(int weight, int deco) {
  if (weight < 0 || deco < 0) throw Error(Errc::SchemaError, "negative leaf weight or decoration");
  Tree t;
  t.code_ = {weight, deco};
  t.leaves_ = 1;
  t.weight_ = weight;
  return t;
}

Tree Tree::join(Tree const& l, Tree const& r) {
  if (l.is_unit() || r.is_unit()) throw Error(Errc::SchemaError, "plain join with the unit");
  Tree t;
  t.code_.reserve(1 + l.code_.size() + r.code_.size());
  t.code_.push_back(-1);
  t.code_.insert(t.code_.end(), l.code_.begin(), l.code_.end());
  t.code_.insert(t.code_.end(), r.code_.begin(), r.code_.end());
  t.leaves_ = l.leaves_ + r.leaves_;
  t.weight_ = l.weight_ + r.weight_;
  return t;
}

Tree Tree::from_code(std::vector<int> code) {
  Tree t;
  if (code.empty()) return t;
  std::size_t pos = 0;
  int need = 1;
  while (need > 0) {
    if (pos >= code.size()) throw Error(Errc::SchemaError, "truncated tree code");
    if (code[pos] == -1) {
      ++need;
      ++pos;
      continue;
    }
    if (pos + 1 >= code.size() || code[pos] < 0 || code[pos + 1] < 0)
      throw Error(Errc::SchemaError, "malformed tree leaf");
    t.weight_ += code[pos];
    ++t.leaves_;
    --need;
    pos += 2;
  }
  if (pos != code.size()) throw Error(Errc::SchemaError, "trailing entries in tree code");
  t.code_ = std::move(code);
  return t;
}

Tree Tree::left() const {
  std::size_t const e = subtree_end(code_, 1);
  return from_code(std::vector<int>(code_.begin() + 1, code_.begin() + e));
}

Tree Tree::right() const {
  std::size_t const e = subtree_end(code_, 1);
  return from_code(std::vector<int>(code_.begin() + e, code_.end()));
}

std::vector<Tree::Label> Tree::labels() const {
  std::vector<Label> out;
  for (std::size_t i = 0; i < code_.size();) {
    if (code_[i] == -1) {
      ++i;
    } else {
      out.push_back({code_[i], code_[i + 1]});
      i += 2;
    }
  }
  return out;
}

Tree Tree::relabel(std::vector<Label> const& labels) const {
  std::vector<int> code = code_;
  std::size_t k = 0;
  for (std::size_t i = 0; i < code.size();) {
    if (code[i] == -1) {
      ++i;
    } else {
      code[i] = labels.at(k).weight;
      code[i + 1] = labels.at(k).deco;
      ++k;
      i += 2;
    }
  }
  return from_code(std::move(code));
}

Tree Tree::with_weights_shifted(int by) const {
  auto ls = labels();
  for (auto& l : ls) l.weight += by;
  return relabel(ls);
}

std::string Tree::str() const {
  if (is_unit()) return "1";
  std::string out;
  std::vector<int> pending;  // open internal nodes: 0 before left child, 1 before right
  for (std::size_t i = 0; i < code_.size();) {
    if (code_[i] == -1) {
      out += "(";
      pending.push_back(0);
      ++i;
      continue;
    }
    out += std::to_string(code_[i + 1]);
    if (code_[i] > 0) out += "^" + std::to_string(code_[i]);
    i += 2;
    while (!pending.empty()) {
      if (pending.back() == 0) {
        pending.back() = 1;
        out += " v ";
        break;
      }
      pending.pop_back();
      out += ")";
    }
  }
  return out;
}

std::vector<Tree> tree_shapes(int n) {
  if (n <= 0) return {};
  if (n == 1) return {Tree::leaf(0, 0)};
  std::vector<Tree> out;
  for (int k = 1; k < n; ++k)
    for (auto const& l : tree_shapes(k))
      for (auto const& r : tree_shapes(n - k)) out.push_back(Tree::join(l, r));
  return out;
}

Tree substitute(std::vector<int> const& context, Tree const& t) {
  std::vector<int> code;
  code.reserve(context.size() + t.code().size());
  for (int x : context) {
    if (x == kHole)
      code.insert(code.end(), t.code().begin(), t.code().end());
    else
      code.push_back(x);
  }
  return Tree::from_code(std::move(code));
}

}  // namespace homhopf
