#include "homhopf/semidual.hpp"

#include "homhopf/duality.hpp"
#include "homhopf/lifted_actions.hpp"

namespace homhopf {

namespace {

bool order_ok(LinearOperator const& a, LinearOperator const& b) {
  return a.power(4).compose(b.power(-2)).is_identity();
}

}  // namespace

CoactionData coaction_from_action(HomHopf const& v, ActionData const& action) {
  if (action.side != Side::Left || action.acting_dim != v.dim())
    throw Error(Errc::PairingDegenerate, "action is not a left action of the paired algebra");
  LinearOperator const shift = v.alg.alpha.power(-2);
  CoactionData c;
  c.carrier_dim = action.carrier_dim;
  c.coalgebra_dim = v.dim();
  c.table.resize(c.carrier_dim);
  for (int k = 0; k < v.dim(); ++k)
    for (int u = 0; u < c.carrier_dim; ++u) {
      // Coefficients beyond a truncation window are left out.
      try {
        Vec img;
        for (auto const& [j, s] : shift(k)) img.add_scaled(action.act(j, u), s);
        for (auto const& [i, x] : img) c.table[u].add(Index{i, k}, x);
      } catch (TruncationOverflow const&) {
      }
    }
  c.theta = action.gamma;
  return c;
}

ActionData dual_left_action_from_right_action(HomHopf const& u, ActionData const& right) {
  if (right.side != Side::Right || right.acting_dim != u.dim())
    throw Error(Errc::PairingDegenerate, "action is not a right action of the acting algebra");
  if (!right.gamma.is_invertible()) throw Error(Errc::NotInvertibleGamma, "structure map of the right action");
  LinearOperator const g2 = right.gamma.power(-2);
  LinearOperator const p2 = u.alg.alpha.power(-2);
  int const dv = right.carrier_dim;
  ActionData a;
  a.side = Side::Left;
  a.acting_dim = u.dim();
  a.carrier_dim = dv;
  a.table.assign(static_cast<std::size_t>(a.acting_dim) * dv, Vec{});
  for (int x = 0; x < a.acting_dim; ++x)
    for (int k = 0; k < dv; ++k) {
      // gamma^-2(v_k) ◁ phi^-2(u_x); its e_i coefficient is <u ▷ f_i, v_k>.
      Vec img;
      try {
        for (auto const& [j, s] : g2(k))
          for (auto const& [y, t] : p2(x)) img.add_scaled(right.act(y, j), s * t);
      } catch (TruncationOverflow const&) {
        continue;
      }
      for (auto const& [i, c] : img) a.table[static_cast<std::size_t>(x) * dv + i]->add(k, c);
    }
  a.gamma = right.gamma.inverse().transpose();
  return a;
}

bool order_constraints_hold(MatchedPairHopf const& p) {
  return order_ok(p.v.alg.alpha, p.v.coalg.beta) && order_ok(p.u.alg.alpha, p.u.coalg.beta);
}

MutualPairHopf semidualize(MatchedPairHopf const& p, SemidualConfig const& cfg) {
  if (cfg.enforce_order && !order_constraints_hold(p))
    throw Error(Errc::OrderConstraintViolated, "alpha^4 beta^-2 = Id and phi^4 psi^-2 = Id are required");
  MutualPairHopf m;
  m.f = dual_hom_hopf(p.v);
  m.u = p.u;
  m.action = dual_left_action_from_right_action(p.u, p.right);
  m.coaction = coaction_from_action(p.v, p.left);
  return m;
}

bool HomLieHopfResult::passed() const {
  return lie.passed() && well_defined.passed() && matched.passed() && mutual.passed() && bicross.passed();
}

HomLieHopfResult build_hom_lie_hopf(MatchedPairLie const& p, int n, int weight_bound, SemidualConfig const& cfg) {
  if (cfg.enforce_order && (!p.g.phi.power(4).is_identity() || !p.h.phi.power(4).is_identity()))
    throw Error(Errc::OrderConstraintViolated, "phi^4 = Id on g and alpha^4 = Id on h are required");
  HomLieHopfResult r;
  r.lie = check_matched_pair_lie(p);
  TruncatedUEA const ug(p.g, n, weight_bound);
  TruncatedUEA const uh(p.h, n, weight_bound);
  r.dims_g = ug.dims();
  r.dims_h = uh.dims();
  LiftedActions const lifted(p, ug, uh);
  r.well_defined = lifted.check_well_defined();
  r.matched_pair = MatchedPairHopf{ug.hopf(), uh.hopf(), lifted.left_action(), lifted.right_action()};
  r.matched = check_matched_pair_hopf(r.matched_pair);
  if (!r.matched.passed())
    throw Error(Errc::NotMatchedPair, "lifted pair fails " + r.matched.failed_equations().front());
  r.mutual_pair = semidualize(r.matched_pair, cfg);
  r.mutual = check_mutual_pair(r.mutual_pair);
  r.bicrossproduct = build_bicrossproduct(r.mutual_pair, false);
  r.bicross = check_hom_hopf(r.bicrossproduct);
  return r;
}

}  // namespace homhopf
