#include "homhopf/hom_structures.hpp"

#include "homhopf/error.hpp"

#include <string>

namespace homhopf {

namespace {

void check_index(int i, int dim, char const* what) {
  if (i < 0 || i >= dim)
    throw Error(Errc::UnknownBasisIndex, std::string(what) + ": basis index " + std::to_string(i) +
                                             " outside dimension " + std::to_string(dim));
}

void check_vec(Vec const& v, int dim, char const* what) {
  for (auto const& [i, c] : v) check_index(i, dim, what);
}

}  // namespace

Vec HomAlgebra::mul(int i, int j) const {
  auto const& e = table.at(static_cast<std::size_t>(i) * dim + j);
  if (!e) throw TruncationOverflow("product outside truncation window");
  return *e;
}

Vec HomAlgebra::mul(Vec const& x, Vec const& y) const {
  Vec out;
  for (auto const& [i, a] : x)
    for (auto const& [j, b] : y) out.add_scaled(mul(i, j), a * b);
  return out;
}

Rational HomCoalgebra::eps(Vec const& v) const {
  Rational r = 0;
  for (auto const& [i, c] : v) r += c * counit.at(i);
  return r;
}

Vec ActionData::act(int acting, int carrier) const {
  auto const& e = table.at(static_cast<std::size_t>(acting) * carrier_dim + carrier);
  if (!e) throw TruncationOverflow("action outside truncation window");
  return *e;
}

Tensor op_at(Tensor const& t, std::size_t pos, LinearOperator const& op) {
  return map_slot(t, pos, [&](int i) -> Vec const& { return op(i); });
}

Tensor mul_at(Tensor const& t, std::size_t pos, HomAlgebra const& a) {
  return apply_at(t, pos, 2, [&](std::span<int const> s) { return tensor_of(a.mul(s[0], s[1])); });
}

Tensor unit_at(Tensor const& t, std::size_t pos, HomAlgebra const& a) { return insert_slot(t, pos, a.unit); }

Tensor comul_at(Tensor const& t, std::size_t pos, HomCoalgebra const& c) {
  return apply_at(t, pos, 1, [&](std::span<int const> s) -> Tensor const& { return c.comult.at(s[0]); });
}

Tensor counit_at(Tensor const& t, std::size_t pos, HomCoalgebra const& c) {
  return contract_slot(t, pos, [&](int i) { return c.counit.at(i); });
}

Tensor act_at(Tensor const& t, std::size_t pos, ActionData const& a) {
  return apply_at(t, pos, 2, [&](std::span<int const> s) {
    return a.side == Side::Left ? tensor_of(a.act(s[0], s[1])) : tensor_of(a.act(s[1], s[0]));
  });
}

Tensor coact_at(Tensor const& t, std::size_t pos, CoactionData const& c) {
  return apply_at(t, pos, 1, [&](std::span<int const> s) -> Tensor const& { return c.table.at(s[0]); });
}

void validate(HomAlgebra const& a) {
  if (a.dim < 0 || a.table.size() != static_cast<std::size_t>(a.dim) * a.dim)
    throw Error(Errc::SchemaError, "multiplication table has wrong size");
  for (auto const& e : a.table)
    if (e) check_vec(*e, a.dim, "multiplication");
  check_vec(a.unit, a.dim, "unit");
  if (a.alpha.dim() != a.dim) throw Error(Errc::SchemaError, "alpha has wrong dimension");
}

void validate(HomCoalgebra const& c) {
  if (static_cast<int>(c.comult.size()) != c.dim || static_cast<int>(c.counit.size()) != c.dim)
    throw Error(Errc::SchemaError, "comultiplication or counit has wrong size");
  for (auto const& t : c.comult)
    for (auto const& [k, x] : t) {
      if (k.size() != 2) throw Error(Errc::SchemaError, "comultiplication term is not a pair");
      check_index(k[0], c.dim, "comultiplication");
      check_index(k[1], c.dim, "comultiplication");
    }
  if (c.beta.dim() != c.dim) throw Error(Errc::SchemaError, "beta has wrong dimension");
}

void validate(HomHopf const& h) {
  validate(h.alg);
  validate(h.coalg);
  if (h.alg.dim != h.coalg.dim) throw Error(Errc::SchemaError, "algebra and coalgebra dimensions differ");
  if (h.antipode.dim() != h.alg.dim) throw Error(Errc::SchemaError, "antipode has wrong dimension");
}

}  // namespace homhopf
