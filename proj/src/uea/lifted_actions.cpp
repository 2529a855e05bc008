#include "homhopf/lifted_actions.hpp"

#include "homhopf/error.hpp"

namespace homhopf {

LiftedActions::LiftedActions(MatchedPairLie p, TruncatedUEA const& ug, TruncatedUEA const& uh)
    : p_(std::move(p)), ug_(ug), uh_(uh) {
  CheckReport const r = check_matched_pair_lie(p_);
  if (!r.passed()) throw Error(Errc::NotMatchedPair, "Hom-Lie pair is not matched: " + r.summary());
}

Vec LiftedActions::act_U_on_h(Vec const& eta, TreeComb const& t) const {
  Vec out;
  for (auto const& [i, a] : eta)
    for (auto const& [x, b] : t) out.add_scaled(rh(i, x), a * b);
  return out;
}

TreeComb LiftedActions::act_h_on_U(Vec const& eta, TreeComb const& t) const {
  TreeComb out;
  for (auto const& [i, a] : eta)
    for (auto const& [x, b] : t) out.add_scaled(hg(i, x), a * b);
  return out;
}

Vec LiftedActions::act_Uh_on_g(TreeComb const& omega, Vec const& xi) const {
  Vec out;
  for (auto const& [o, a] : omega)
    for (auto const& [j, b] : xi) out.add_scaled(hog(o, j), a * b);
  return out;
}

TreeComb LiftedActions::act_g_on_Uh(TreeComb const& omega, Vec const& xi) const {
  TreeComb out;
  for (auto const& [o, a] : omega)
    for (auto const& [j, b] : xi) out.add_scaled(rhg(o, j), a * b);
  return out;
}

TreeComb LiftedActions::left(TreeComb const& omega, TreeComb const& t) const {
  TreeComb out;
  for (auto const& [o, a] : omega)
    for (auto const& [x, b] : t) out.add_scaled(left(o, x), a * b);
  return out;
}

TreeComb LiftedActions::right(TreeComb const& omega, TreeComb const& t) const {
  TreeComb out;
  for (auto const& [o, a] : omega)
    for (auto const& [x, b] : t) out.add_scaled(right(o, x), a * b);
  return out;
}

// eta ◁ 1 = alpha(eta), eta ◁ (s, xi) = eta ◁ phi^s(xi),
// eta ◁ (L v R) = (alpha^-1(eta) ◁ L) ◁ a(R).
Vec LiftedActions::rh(int eta, Tree const& t) const {
  Key const key{eta, t};
  if (auto it = rh_.find(key); it != rh_.end()) return it->second;
  TreeModel const& gm = ug_.model();
  TreeModel const& hm = uh_.model();
  Vec out;
  if (t.is_unit()) {
    out = hm.phi_power(1)(eta);
  } else if (t.is_leaf()) {
    out = p_.right.act(gm.phi_power(t.label().weight)(t.label().deco), basis_vec(eta));
  } else {
    Vec const inner = act_U_on_h(hm.phi_power(-1)(eta), TreeComb(t.left()));
    out = act_U_on_h(inner, gm.twist(t.right(), 1));
  }
  return rh_.emplace(key, std::move(out)).first->second;
}

// eta ▷ 1 = 0, eta ▷ (s, xi) = (s, alpha^-s(eta) ▷ xi), and
// eta ▷ (L v R) = (alpha^-1(eta) ▷ L) v a(R) + a(L1) v [(alpha^-2(eta) ◁ a^-1(L2)) ▷ R].
TreeComb LiftedActions::hg(int eta, Tree const& t) const {
  Key const key{eta, t};
  if (auto it = hg_.find(key); it != hg_.end()) return it->second;
  TreeModel const& gm = ug_.model();
  TreeModel const& hm = uh_.model();
  TreeComb out;
  if (t.is_leaf()) {
    auto const [s, d] = t.label();
    out = TreeModel::leaves_of(p_.left.act(hm.phi_power(-s)(eta), basis_vec(d)), s);
  } else if (!t.is_unit()) {
    Tree const l = t.left();
    TreeComb const r(t.right());
    out = gm.graft(act_h_on_U(hm.phi_power(-1)(eta), TreeComb(l)), gm.twist(r, 1));
    Vec const eta2 = hm.phi_power(-2)(eta);
    for (auto const& [pr, c] : gm.coproduct(l)) {
      Vec const acting = act_U_on_h(eta2, gm.twist(pr.second, -1));
      out.add_scaled(gm.graft(gm.twist(pr.first, 1), act_h_on_U(acting, r)), c);
    }
  }
  return hg_.emplace(key, std::move(out)).first->second;
}

// 1 ▷ xi = phi(xi), (s, eta) ▷ xi = alpha^s(eta) ▷ xi,
// (L v R) ▷ xi = a(L) ▷ (R ▷ phi^-1(xi)).
Vec LiftedActions::hog(Tree const& omega, int xi) const {
  std::pair<Tree, int> const key{omega, xi};
  if (auto it = hog_.find(key); it != hog_.end()) return it->second;
  TreeModel const& gm = ug_.model();
  TreeModel const& hm = uh_.model();
  Vec out;
  if (omega.is_unit()) {
    out = gm.phi_power(1)(xi);
  } else if (omega.is_leaf()) {
    auto const [s, d] = omega.label();
    out = p_.left.act(hm.phi_power(s)(d), basis_vec(xi));
  } else {
    Vec const inner = act_Uh_on_g(TreeComb(omega.right()), gm.phi_power(-1)(xi));
    out = act_Uh_on_g(hm.twist(omega.left(), 1), inner);
  }
  return hog_.emplace(key, std::move(out)).first->second;
}

// 1 ◁ xi = 0, (s, eta) ◁ xi = (s, eta ◁ phi^-s(xi)), and
// (L v R) ◁ xi = a(L) v (R ◁ phi^-1(xi)) + [L ◁ (a^-1(R1) ▷ phi^-2(xi))] v a(R2).
TreeComb LiftedActions::rhg(Tree const& omega, int xi) const {
  std::pair<Tree, int> const key{omega, xi};
  if (auto it = rhg_.find(key); it != rhg_.end()) return it->second;
  TreeModel const& gm = ug_.model();
  TreeModel const& hm = uh_.model();
  TreeComb out;
  if (omega.is_leaf()) {
    auto const [s, d] = omega.label();
    out = TreeModel::leaves_of(p_.right.act(gm.phi_power(-s)(xi), basis_vec(d)), s);
  } else if (!omega.is_unit()) {
    TreeComb const l(omega.left());
    Tree const r = omega.right();
    out = hm.graft(hm.twist(l, 1), act_g_on_Uh(TreeComb(r), gm.phi_power(-1)(xi)));
    Vec const xi2 = gm.phi_power(-2)(xi);
    for (auto const& [pr, c] : hm.coproduct(r)) {
      Vec const z = act_Uh_on_g(hm.twist(pr.first, -1), xi2);
      out.add_scaled(hm.graft(act_g_on_Uh(l, z), hm.twist(pr.second, 1)), c);
    }
  }
  return rhg_.emplace(key, std::move(out)).first->second;
}

// 1 ▷ t = a(t), (s, eta) ▷ t = alpha^s(eta) ▷ t,
// (L v R) ▷ t = a(L) ▷ (R ▷ a^-1(t)).
TreeComb LiftedActions::left(Tree const& omega, Tree const& t) const {
  TreeKey const key{omega, t};
  if (auto it = left_.find(key); it != left_.end()) return it->second;
  TreeModel const& gm = ug_.model();
  TreeModel const& hm = uh_.model();
  TreeComb out;
  if (omega.is_unit()) {
    out = gm.twist(t, 1);
  } else if (omega.is_leaf()) {
    auto const [s, d] = omega.label();
    out = act_h_on_U(hm.phi_power(s)(d), TreeComb(t));
  } else {
    TreeComb const inner = left(TreeComb(omega.right()), gm.twist(t, -1));
    out = left(hm.twist(omega.left(), 1), inner);
  }
  return left_.emplace(key, std::move(out)).first->second;
}

// Omega ◁ 1 = a(Omega), Omega ◁ (s, xi) = Omega ◁ phi^s(xi),
// Omega ◁ (t1 v t2) = (a^-1(Omega) ◁ t1) ◁ a(t2).
TreeComb LiftedActions::right(Tree const& omega, Tree const& t) const {
  TreeKey const key{omega, t};
  if (auto it = right_.find(key); it != right_.end()) return it->second;
  TreeModel const& gm = ug_.model();
  TreeModel const& hm = uh_.model();
  TreeComb out;
  if (t.is_unit()) {
    out = hm.twist(omega, 1);
  } else if (t.is_leaf()) {
    out = act_g_on_Uh(TreeComb(omega), gm.phi_power(t.label().weight)(t.label().deco));
  } else {
    TreeComb const inner = right(hm.twist(omega, -1), TreeComb(t.left()));
    out = right(inner, gm.twist(t.right(), 1));
  }
  return right_.emplace(key, std::move(out)).first->second;
}

ActionData LiftedActions::left_action() const {
  auto const& hb = uh_.basis();
  auto const& gb = ug_.basis();
  ActionData a;
  a.side = Side::Left;
  a.acting_dim = static_cast<int>(hb.size());
  a.carrier_dim = static_cast<int>(gb.size());
  a.table = tabulate(a.acting_dim, a.carrier_dim,
                     [&](int i, int j) { return ug_.project(left(hb[i], gb[j])); });
  a.gamma = ug_.hopf().alg.alpha;
  return a;
}

ActionData LiftedActions::right_action() const {
  auto const& hb = uh_.basis();
  auto const& gb = ug_.basis();
  ActionData a;
  a.side = Side::Right;
  a.acting_dim = static_cast<int>(gb.size());
  a.carrier_dim = static_cast<int>(hb.size());
  a.table = tabulate(a.acting_dim, a.carrier_dim,
                     [&](int i, int j) { return uh_.project(right(hb[j], gb[i])); });
  a.gamma = uh_.hopf().alg.alpha;
  return a;
}

namespace {

// Runs pred over a grid, recording failures; overflowing entries are not
// counted as checked.
template <class F>
void record_grid(CheckReport& r, std::string const& id, std::size_t rows, std::size_t cols, F&& pred) {
  std::vector<Index> bad;
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      try {
        bool const ok = pred(i, j);
        ++n;
        if (!ok) bad.push_back(Index{static_cast<int>(i), static_cast<int>(j)});
      } catch (TruncationOverflow const&) {
      }
    }
  r.record(id, n, bad);
}

}  // namespace

CheckReport LiftedActions::check_well_defined() const {
  CheckReport r;
  int const dh = uh_.lie().dim;
  auto const g_ideal = ug_.ideal_basis();
  auto const h_ideal = uh_.ideal_basis();
  auto const& gb = ug_.basis();
  auto const& hb = uh_.basis();
  std::vector<TreeComb> g_gens = ug_.hom_assoc_generators();
  for (auto const& v : ug_.hopf_ideal_generators()) g_gens.push_back(v);

  record_grid(r, "h-action-ideal", dh, g_gens.size(), [&](std::size_t i, std::size_t j) {
    return ug_.in_ideal(act_h_on_U(basis_vec(static_cast<int>(i)), g_gens[j]));
  });
  record_grid(r, "right-action-ideal", dh, g_gens.size(), [&](std::size_t i, std::size_t j) {
    return act_U_on_h(basis_vec(static_cast<int>(i)), g_gens[j]).empty();
  });
  record_grid(r, "lifted-left-carrier-ideal", hb.size(), g_ideal.size(), [&](std::size_t i, std::size_t j) {
    return ug_.in_ideal(left(TreeComb(hb[i]), g_ideal[j]));
  });
  record_grid(r, "lifted-left-acting-ideal", h_ideal.size(), gb.size(), [&](std::size_t i, std::size_t j) {
    return ug_.in_ideal(left(h_ideal[i], TreeComb(gb[j])));
  });
  record_grid(r, "lifted-right-carrier-ideal", h_ideal.size(), gb.size(), [&](std::size_t i, std::size_t j) {
    return uh_.in_ideal(right(h_ideal[i], TreeComb(gb[j])));
  });
  record_grid(r, "lifted-right-acting-ideal", hb.size(), g_ideal.size(), [&](std::size_t i, std::size_t j) {
    return uh_.in_ideal(right(TreeComb(hb[i]), g_ideal[j]));
  });
  return r;
}

}  // namespace homhopf
