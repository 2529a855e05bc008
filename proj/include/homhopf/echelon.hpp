#pragma once

#include "homhopf/lincomb.hpp"

#include <functional>
#include <map>
#include <vector>

namespace homhopf {

// Incremental row echelon form of a subspace spanned by sparse vectors.
// The pivot of a row is its least key under Order.  reduce() returns the
// unique representative with no pivot keys, so it is the projection onto the
// span of non-pivot keys along the subspace.
template <class Key, class Order = std::less<Key>>
class Echelon {
 public:
  using Row = std::map<Key, Rational, Order>;

  // Returns true when v was independent of the rows already present.
  bool insert(LinComb<Key> const& v) {
    Row r = reduce_row(to_row(v));
    if (r.empty()) return false;
    Rational const inv = 1 / r.begin()->second;
    for (auto& kv : r) kv.second *= inv;
    Key const pivot = r.begin()->first;
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  LinComb<Key> reduce(LinComb<Key> const& v) const {
    LinComb<Key> out;
    for (auto const& [k, c] : reduce_row(to_row(v))) out.add(k, c);
    return out;
  }

  bool contains(LinComb<Key> const& v) const { return reduce_row(to_row(v)).empty(); }
  bool is_pivot(Key const& k) const { return rows_.count(k) != 0; }
  std::size_t rank() const { return rows_.size(); }

  // Fully reduced basis of the subspace, one vector per pivot.
  std::vector<LinComb<Key>> basis() const {
    std::vector<LinComb<Key>> out;
    for (auto const& [p, row] : rows_) {
      Row tail(row);
      tail.erase(p);
      LinComb<Key> v(p);
      for (auto const& [k, c] : reduce_row(tail)) v.add(k, c);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static Row to_row(LinComb<Key> const& v) {
    Row r;
    for (auto const& [k, c] : v) r.emplace(k, c);
    return r;
  }

  Row reduce_row(Row r) const {
    auto it = r.begin();
    while (it != r.end()) {
      auto pr = rows_.find(it->first);
      if (pr == rows_.end()) {
        ++it;
        continue;
      }
      Key const k = it->first;
      Rational const c = it->second;
      for (auto const& [k2, c2] : pr->second) {
        auto [slot, fresh] = r.try_emplace(k2, 0);
        slot->second -= c * c2;
        if (slot->second == 0) r.erase(slot);
      }
      it = r.upper_bound(k);
    }
    return r;
  }

  std::map<Key, Row, Order> rows_;
};

template <class Key, class Order = std::less<Key>>
Echelon<Key, Order> subspace_echelon(std::vector<LinComb<Key>> const& spanning) {
  Echelon<Key, Order> e;
  for (auto const& v : spanning) e.insert(v);
  return e;
}

}  // namespace homhopf
