#include "homhopf/hom_lie.hpp"

#include "homhopf/error.hpp"

namespace homhopf {

namespace {
using Pair = std::pair<Tensor, Tensor>;
}

Vec HomLie::br(Vec const& x, Vec const& y) const {
  Vec out;
  for (auto const& [i, a] : x)
    for (auto const& [j, b] : y) out.add_scaled(br(i, j), a * b);
  return out;
}

Vec LieAction::act(Vec const& acting, Vec const& carrier) const {
  Vec out;
  for (auto const& [i, a] : acting)
    for (auto const& [j, b] : carrier) out.add_scaled(act(i, j), a * b);
  return out;
}

HomLie abelian_hom_lie(int dim, LinearOperator phi) {
  HomLie g;
  g.dim = dim;
  g.bracket.assign(static_cast<std::size_t>(dim) * dim, Vec{});
  g.phi = std::move(phi);
  return g;
}

void validate(HomLie const& g) {
  if (g.bracket.size() != static_cast<std::size_t>(g.dim) * g.dim || g.phi.dim() != g.dim)
    throw Error(Errc::SchemaError, "Hom-Lie data has inconsistent dimensions");
  for (auto const& v : g.bracket)
    for (auto const& [i, c] : v)
      if (i < 0 || i >= g.dim) throw Error(Errc::UnknownBasisIndex, "bracket uses an unknown basis index");
}

Tensor bracket_at(Tensor const& t, std::size_t pos, HomLie const& g) {
  return apply_at(t, pos, 2, [&](std::span<int const> s) { return tensor_of(g.br(s[0], s[1])); });
}

Tensor lie_act_at(Tensor const& t, std::size_t pos, LieAction const& m) {
  return apply_at(t, pos, 2, [&](std::span<int const> s) {
    return m.side == Side::Left ? tensor_of(m.act(s[0], s[1])) : tensor_of(m.act(s[1], s[0]));
  });
}

CheckReport check_hom_lie(HomLie const& g) {
  CheckReport r;
  Slot const G{g.dim};
  LinearOperator const& phi = g.phi;
  check_equation(r, "antisymmetry", {G, G}, {G}, [&](Index const& i) {
    return Pair{tensor_of(g.br(i[0], i[1])), tensor_of(-g.br(i[1], i[0]))};
  });
  // [phi x, [y, z]] + [phi y, [z, x]] + [phi z, [x, y]] = 0
  check_equation(r, "Hom-Jacobi", {G, G, G}, {G}, [&](Index const& i) {
    Tensor sum;
    for (auto const& p : {Index{i[0], i[1], i[2]}, Index{i[1], i[2], i[0]}, Index{i[2], i[0], i[1]}})
      sum += bracket_at(op_at(bracket_at(tensor_of(p), 1, g), 0, phi), 0, g);
    return Pair{sum, Tensor{}};
  });
  check_equation(r, "phi-multiplicative", {G, G}, {G}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    return Pair{op_at(bracket_at(t, 0, g), 0, phi), bracket_at(op_at(op_at(t, 0, phi), 1, phi), 0, g)};
  });
  return r;
}

HomLie lie_twist(HomLie const& classical, LinearOperator const& t) {
  validate(classical);
  for (int i = 0; i < classical.dim; ++i)
    for (int j = 0; j < classical.dim; ++j)
      if (t(classical.br(i, j)) != classical.br(t(i), t(j)))
        throw Error(Errc::NotLieEndomorphism, "twist does not preserve the bracket");
  HomLie out = classical;
  for (auto& v : out.bracket) v = t(v);
  out.phi = t;
  return out;
}

HomLie commutator_hom_lie(HomAlgebra const& a) {
  HomLie g;
  g.dim = a.dim;
  g.phi = a.alpha;
  g.bracket.resize(static_cast<std::size_t>(a.dim) * a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) g.bracket[static_cast<std::size_t>(i) * a.dim + j] = a.mul(i, j) - a.mul(j, i);
  return g;
}

LieAction trivial_lie_action(Side side, int acting_dim, LinearOperator gamma) {
  LieAction m;
  m.side = side;
  m.acting_dim = acting_dim;
  m.carrier_dim = gamma.dim();
  m.table.assign(static_cast<std::size_t>(acting_dim) * m.carrier_dim, Vec{});
  m.gamma = std::move(gamma);
  return m;
}

CheckReport check_lie_module(LieAction const& m, HomLie const& acting) {
  CheckReport r;
  Slot const G{acting.dim};
  Slot const V{m.carrier_dim};
  LinearOperator const& phi = acting.phi;
  LinearOperator const& ga = m.gamma;
  if (m.side == Side::Left) {
    check_equation(r, "lie-module-twist", {G, V}, {V}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      return Pair{op_at(lie_act_at(t, 0, m), 0, ga), lie_act_at(op_at(op_at(t, 0, phi), 1, ga), 0, m)};
    });
    // [x, y] . gamma(v) = phi(x) . (y . v) - phi(y) . (x . v)
    check_equation(r, "lie-module-bracket", {G, G, V}, {V}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      Tensor lhs = lie_act_at(op_at(bracket_at(t, 0, acting), 1, ga), 0, m);
      Tensor rhs = lie_act_at(op_at(lie_act_at(t, 1, m), 0, phi), 0, m);
      rhs -= lie_act_at(op_at(lie_act_at(permute(t, {1, 0, 2}), 1, m), 0, phi), 0, m);
      return Pair{lhs, rhs};
    });
  } else {
    check_equation(r, "lie-module-twist", {V, G}, {V}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      return Pair{op_at(lie_act_at(t, 0, m), 0, ga), lie_act_at(op_at(op_at(t, 0, ga), 1, phi), 0, m)};
    });
    // gamma(v) . [x, y] = (v . x) . phi(y) - (v . y) . phi(x)
    check_equation(r, "lie-module-bracket", {V, G, G}, {V}, [&](Index const& i) {
      Tensor const t = tensor_of(i);
      Tensor lhs = lie_act_at(op_at(bracket_at(t, 1, acting), 0, ga), 0, m);
      Tensor rhs = lie_act_at(op_at(lie_act_at(t, 0, m), 1, phi), 0, m);
      rhs -= lie_act_at(op_at(lie_act_at(permute(t, {0, 2, 1}), 0, m), 1, phi), 0, m);
      return Pair{lhs, rhs};
    });
  }
  return r;
}

CheckReport check_matched_pair_lie(MatchedPairLie const& p) {
  HomLie const& g = p.g;
  HomLie const& h = p.h;
  LinearOperator const& phi = g.phi;
  LinearOperator const& al = h.phi;
  LieAction const& L = p.left;
  LieAction const& R = p.right;
  if (L.acting_dim != h.dim || L.carrier_dim != g.dim || R.acting_dim != g.dim || R.carrier_dim != h.dim)
    throw Error(Errc::SchemaError, "matched pair actions have wrong dimensions");

  CheckReport r = check_lie_module(L, h);
  r.merge(check_lie_module(R, g));
  if (L.gamma != phi || R.gamma != al)
    throw Error(Errc::SchemaError, "matched pair actions must use the twists of their carriers");
  Slot const G{g.dim};
  Slot const H{h.dim};

  // alpha(y) ▷ [x, x'] = [y ▷ x, phi x'] + [phi x, y ▷ x'] + (y ◁ x) ▷ phi x' - (y ◁ x') ▷ phi x
  check_equation(r, "matched-pair-I", {H, G, G}, {G}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor const sw = permute(t, {0, 2, 1});
    Tensor lhs = lie_act_at(op_at(bracket_at(t, 1, g), 0, al), 0, L);
    Tensor rhs = bracket_at(op_at(lie_act_at(t, 0, L), 1, phi), 0, g);
    rhs -= bracket_at(op_at(lie_act_at(sw, 0, L), 1, phi), 0, g);
    rhs += lie_act_at(op_at(lie_act_at(t, 0, R), 1, phi), 0, L);
    rhs -= lie_act_at(op_at(lie_act_at(sw, 0, R), 1, phi), 0, L);
    return Pair{lhs, rhs};
  });
  // [y, y'] ◁ phi(x) = [alpha y, y' ◁ x] + [y ◁ x, alpha y'] + alpha y ◁ (y' ▷ x) - alpha y' ◁ (y ▷ x)
  check_equation(r, "matched-pair-II", {H, H, G}, {H}, [&](Index const& i) {
    Tensor const t = tensor_of(i);
    Tensor const sw = permute(t, {1, 0, 2});
    Tensor lhs = lie_act_at(op_at(bracket_at(t, 0, h), 1, phi), 0, R);
    Tensor rhs = bracket_at(op_at(lie_act_at(t, 1, R), 0, al), 0, h);
    rhs -= bracket_at(op_at(lie_act_at(sw, 1, R), 0, al), 0, h);
    rhs += lie_act_at(op_at(lie_act_at(t, 1, L), 0, al), 0, R);
    rhs -= lie_act_at(op_at(lie_act_at(sw, 1, L), 0, al), 0, R);
    return Pair{lhs, rhs};
  });
  return r;
}

HomLie bicrossed_sum(MatchedPairLie const& p) {
  CheckReport const r = check_matched_pair_lie(p);
  if (!r.passed()) throw Error(Errc::NotMatchedPair, "Lie matched pair check failed: " + r.summary());
  int const gd = p.g.dim;
  int const n = gd + p.h.dim;
  auto shift = [&](Vec const& v) {
    Vec out;
    for (auto const& [i, c] : v) out.add(i + gd, c);
    return out;
  };
  HomLie s;
  s.dim = n;
  s.bracket.assign(static_cast<std::size_t>(n) * n, Vec{});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v;
      bool const ig = i < gd;
      bool const jg = j < gd;
      if (ig && jg) {
        v = p.g.br(i, j);
      } else if (!ig && !jg) {
        v = shift(p.h.br(i - gd, j - gd));
      } else if (!ig && jg) {  // [(0, y), (x, 0)] = (y ▷ x, y ◁ x)
        v = p.left.act(i - gd, j) + shift(p.right.act(j, i - gd));
      } else {  // [(x, 0), (0, y)] = (-y ▷ x, -y ◁ x)
        v = -(p.left.act(j - gd, i) + shift(p.right.act(i, j - gd)));
      }
      s.bracket[static_cast<std::size_t>(i) * n + j] = v;
    }
  std::vector<Vec> cols;
  for (int i = 0; i < gd; ++i) cols.push_back(p.g.phi(i));
  for (int i = 0; i < p.h.dim; ++i) cols.push_back(shift(p.h.phi(i)));
  s.phi = LinearOperator(std::move(cols));
  return s;
}

}  // namespace homhopf
