// Acceptance criteria 1-9.  Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.
#include "fixtures.hpp"
#include "oracles.hpp"

#include "homhopf/duality.hpp"
#include "homhopf/lifted_actions.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace homhopf;
using namespace fixtures;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void require(CheckReport const& r, std::string const& what) {
    require(r.passed(), what + " [" + r.summary() + "]");
  }
};

bool has_all(CheckReport const& r, std::vector<std::string> const& ids) {
  for (auto const& id : ids) {
    auto const* e = r.find(id);
    if (!e || e->checked == 0 || e->failed > 0) return false;
  }
  return true;
}

Outcome criterion1() {
  Outcome o;
  HomHopf const h = kz4_twist();
  CheckReport const b = check_hom_bialgebra(h);
  o.require(b, "bialgebra conditions");
  o.require(check_antipode(h), "antipode axioms");
  CheckReport const d = check_antipode_derived(h);
  o.require(d, "derived antipode properties");
  o.require(d.equations.size() == 4, "four derived properties");
  return o;
}

Outcome criterion2() {
  Outcome o;
  HomHopf const h = kz4_twist();
  HomHopf const d = dual_hom_hopf(h);
  o.require(check_hom_hopf(d), "dual suite");
  o.require(same_tables(dual_hom_hopf(d), h), "double dual equals the original");
  ConvolutionInverse const c = convolution_inverse_of_identity(h);
  o.require(c.unique && c.solution && *c.solution == h.antipode, "convolution inverse of Id equals S");
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int dim : {1, 2}) {
    TruncatedUEA const u(abelian_hom_lie(dim, LinearOperator::identity(dim)), 3);
    o.require(u.dims() == oracles::symmetric_algebra_dims(dim, 3), "PBW dims for dim " + std::to_string(dim));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  HomLie const g = oracles::nonabelian_twisted();
  o.require(check_tree_coassociativity(TreeModel(g), 4, 1), "tree coassociativity, degree 4");
  o.require(check_tree_coassociativity(TreeModel(abelian_hom_lie(1, LinearOperator::scalar(1, -1))), 4, 3),
            "tree coassociativity, phi = -Id");
  for (int n : {3, 4}) {
    TruncatedUEA const u(abelian_hom_lie(1, LinearOperator::scalar(1, -1)), n);
    o.require(check_ideal_membership(u), "ideal membership, phi = -Id, N = " + std::to_string(n));
  }
  TruncatedUEA const u(g, 3, 1);
  o.require(check_ideal_membership(u), "ideal membership, two-dimensional g");
  return o;
}

MatchedPairHopf fixture_b_pair(int n) {
  MatchedPairLie const p = fixture_b();
  TruncatedUEA const ug(p.g, n);
  TruncatedUEA const uh(p.h, n);
  LiftedActions const l(p, ug, uh);
  return MatchedPairHopf{ug.hopf(), uh.hopf(), l.left_action(), l.right_action()};
}

Outcome criterion5() {
  Outcome o;
  MatchedPairHopf p = fixture_b_pair(3);
  CheckReport const r = check_matched_pair_hopf(p);
  o.require(r, "matched pair");
  o.require(has_all(r, {"v-rt-uu'", "vv'-lt-u", "v-lt-u-ot-v-rt-u-switch", "actions-on-1-left", "actions-on-1-right"}),
            "compatibility equations evaluated");
  // x ◁ y: acting y (index 1 of U(g)), carrier x (index 1 of U(h)).
  p.right.table[1 * p.right.carrier_dim + 1] = Vec(1);
  o.require(!check_matched_pair_hopf(p).passed(), "perturbed x ◁ y is detected");
  return o;
}

Outcome criterion6() {
  Outcome o;
  MatchedPairHopf const p = fixture_b_pair(3);
  HomHopf const d = build_double_cross_product(p);
  o.require(check_hom_hopf(d), "double cross product suite");
  int const dv = p.v.dim();
  bool embed = true;
  int compared = 0;
  for (int a = 0; a < p.u.dim(); ++a)
    for (int b = 0; b < p.u.dim(); ++b) {
      auto const& uu = p.u.alg.table[a * p.u.dim() + b];
      auto const& dd = d.alg.table[(a * dv) * d.dim() + b * dv];
      if (!uu) continue;
      ++compared;
      Vec expect;
      for (auto const& [k, c] : *uu) expect.add(k * dv, c);
      embed = embed && dd && *dd == expect;
    }
  o.require(embed && compared > 0, "(u ⊗ 1)(u' ⊗ 1) = (u u') ⊗ 1");
  return o;
}

Outcome criterion7() {
  Outcome o;
  MutualPairHopf const m = finite_mutual_pair();
  o.require(check_mutual_pair(m), "trivial mutual pair");
  HomHopf const b = build_bicrossproduct(m);
  o.require(check_hom_hopf(b), "bicrossproduct suite");
  bool mult = true;
  for (int x = 0; x < b.dim(); ++x)
    for (int y = 0; y < b.dim(); ++y)
      mult = mult && b.coalg.eps(b.alg.mul(x, y)) == b.coalg.counit[x] * b.coalg.counit[y];
  o.require(mult, "counit multiplicative");
  return o;
}

Outcome criterion8() {
  Outcome o;
  int failing = 0;
  for (int k = -1; k < 3; ++k) {
    MatchedPairHopf const p = k < 0 ? finite_matched_pair() : perturbed_pair(k);
    bool const matched = check_matched_pair_hopf(p).passed();
    bool const mutual = check_mutual_pair(semidualize(p)).passed();
    o.require(matched == mutual, "variant " + std::to_string(k + 1) + ": matched " + std::to_string(matched) +
                                     " vs mutual " + std::to_string(mutual));
    if (k < 0) o.require(matched, "unperturbed pair passes");
    failing += !matched;
  }
  o.require(failing == 3, "each perturbation fails");
  return o;
}

Outcome criterion9() {
  Outcome o;
  HomLieHopfResult const a = build_hom_lie_hopf(fixture_a_prime(), 2);
  o.require(a.mutual, "Fixture A' mutual checks");
  o.require(a.bicross, "Fixture A' bicrossproduct suite");
  HomLieHopfResult const b = build_hom_lie_hopf(fixture_b(), 3);
  o.require(b.mutual, "Fixture B mutual checks");
  o.require(same_tables(b.bicrossproduct, oracles::classical_bicross_b(3)), "Fixture B matches the classical tables");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    char const* name;
    Outcome (*run)();
    double limit;  // seconds
  };
  Criterion const criteria[] = {
      {"Hom-Hopf axiom suite on the twisted k[Z/4]", criterion1, 1},
      {"dual, double dual and convolution inverse", criterion2, 1},
      {"PBW dimensions of truncated enveloping algebras", criterion3, 30},
      {"tree coproduct and ideal membership", criterion4, 60},
      {"lifted matched pair on Fixture B", criterion5, 120},
      {"double cross product of Fixture B", criterion6, 120},
      {"bicrossproduct of a trivial mutual pair", criterion7, 30},
      {"semidualization iff on a finite pair and perturbations", criterion8, 60},
      {"Hom-Lie-Hopf pipeline on Fixtures A' and B", criterion9, 300},
  };
  int failed = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (std::exception const& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(s < criteria[i].limit, "over the time limit");
    std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, s,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
