#pragma once

#include "homhopf/lincomb.hpp"

#include <span>
#include <vector>

namespace homhopf {

// An element of V1 ⊗ ... ⊗ Vk in product basis: each key lists one basis
// index per tensor slot.
using Index = std::vector<int>;
using Tensor = LinComb<Index>;

inline Tensor tensor_of(Index const& i) { return Tensor(i); }

inline Tensor tensor_of(Vec const& v) {
  Tensor t;
  for (auto const& [i, c] : v) t.add(Index{i}, c);
  return t;
}

// Reads back an arity-1 tensor.
inline Vec vec_of(Tensor const& t) {
  Vec v;
  for (auto const& [k, c] : t) v.add(k.at(0), c);
  return v;
}

// Replaces slots [pos, pos + arity) of every term by f(those indices), which
// may have any arity.  All slot-level maps below are built on this.
template <class F>
Tensor apply_at(Tensor const& t, std::size_t pos, std::size_t arity, F&& f) {
  Tensor out;
  for (auto const& [key, c] : t) {
    auto&& img = f(std::span<int const>(key.data() + pos, arity));
    for (auto const& [k2, c2] : img) {
      Index nk;
      nk.reserve(key.size() - arity + k2.size());
      nk.insert(nk.end(), key.begin(), key.begin() + pos);
      nk.insert(nk.end(), k2.begin(), k2.end());
      nk.insert(nk.end(), key.begin() + pos + arity, key.end());
      out.add(nk, c * c2);
    }
  }
  return out;
}

// Unary linear map given on basis vectors.
template <class F>
Tensor map_slot(Tensor const& t, std::size_t pos, F&& f) {
  return apply_at(t, pos, 1, [&](std::span<int const> s) { return tensor_of(f(s[0])); });
}

// New slot holding the fixed vector v, inserted before position pos.
inline Tensor insert_slot(Tensor const& t, std::size_t pos, Vec const& v) {
  return apply_at(t, pos, 0, [&](std::span<int const>) { return tensor_of(v); });
}

// Contracts a slot against a linear form.
template <class F>
Tensor contract_slot(Tensor const& t, std::size_t pos, F&& form) {
  return apply_at(t, pos, 1, [&](std::span<int const> s) {
    Tensor r;
    r.add(Index{}, form(s[0]));
    return r;
  });
}

// out[i] = in[perm[i]].
inline Tensor permute(Tensor const& t, std::vector<int> const& perm) {
  Tensor out;
  for (auto const& [key, c] : t) {
    Index nk(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) nk[i] = key[perm[i]];
    out.add(nk, c);
  }
  return out;
}

// Merges slots (pos, pos+1) into one slot of the product space with
// index a * dim_second + b.
inline Tensor flatten_pair(Tensor const& t, std::size_t pos, int dim_second) {
  return apply_at(t, pos, 2, [&](std::span<int const> s) {
    return tensor_of(Index{s[0] * dim_second + s[1]});
  });
}

// Inverse of flatten_pair.
inline Tensor unflatten_slot(Tensor const& t, std::size_t pos, int dim_second) {
  return apply_at(t, pos, 1, [&](std::span<int const> s) {
    return tensor_of(Index{s[0] / dim_second, s[0] % dim_second});
  });
}

}  // namespace homhopf
