#pragma once

#include "homhopf/rational.hpp"

#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

namespace homhopf {

// Finite formal sum of keys with scalar coefficients.  Zero coefficients are
// never stored, so two combinations are equal iff their maps are equal.
template <class Key, class Scalar = Rational>
class LinComb {
 public:
  using map_type = std::map<Key, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(Key const& k, Scalar const& c = Scalar(1)) { add(k, c); }
  LinComb(std::initializer_list<std::pair<Key const, Scalar>> init) {
    for (auto const& [k, c] : init) add(k, c);
  }

  void add(Key const& k, Scalar const& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Scalar coeff(Key const& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  LinComb& operator+=(LinComb const& o) {
    for (auto const& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(LinComb const& o) {
    for (auto const& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(Scalar const& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }
  void add_scaled(LinComb const& o, Scalar const& s) {
    if (s == 0) return;
    for (auto const& [k, c] : o.terms_) add(k, c * s);
  }

  friend LinComb operator+(LinComb a, LinComb const& b) { return a += b; }
  friend LinComb operator-(LinComb a, LinComb const& b) { return a -= b; }
  friend LinComb operator*(Scalar const& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
  friend bool operator==(LinComb const& a, LinComb const& b) { return a.terms_ == b.terms_; }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  map_type const& terms() const { return terms_; }

  // Linear extension of a key-level map f : Key -> LinComb<Key2>.
  template <class F>
  auto map_linear(F&& f) const -> decltype(f(std::declval<Key const&>())) {
    decltype(f(std::declval<Key const&>())) out;
    for (auto const& [k, c] : terms_) out.add_scaled(f(k), c);
    return out;
  }

 private:
  map_type terms_;
};

// Vectors of a finite-dimensional space in a fixed basis.
using Vec = LinComb<int>;

inline Vec basis_vec(int i) { return Vec(i); }

}  // namespace homhopf
