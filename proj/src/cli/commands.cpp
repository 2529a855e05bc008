#include "homhopf/cli.hpp"

#include "homhopf/lifted_actions.hpp"

#include <chrono>
#include <memory>

namespace homhopf::cli {

namespace {

template <class T>
T const& lookup(InputDocument const& d, std::map<std::string, T> const& m, std::string const& role, char const* what) {
  auto const r = d.pipeline.refs.find(role);
  if (r == d.pipeline.refs.end()) throw SchemaError("/pipeline/" + role, "missing reference");
  auto const it = m.find(r->second);
  if (it == m.end()) throw SchemaError("/pipeline/" + role, "\"" + r->second + "\" is not " + what);
  return it->second;
}

std::string const& ref_name(InputDocument const& d, std::string const& role) { return d.pipeline.refs.at(role); }

// An action or coaction must connect the algebras named in the pipeline.
void require_link(InputDocument const& d, std::string const& role, std::string const& acting,
                  std::string const& carrier) {
  std::string const& n = ref_name(d, role);
  auto const& [a, c] = d.links.at(n);
  if (a != ref_name(d, acting)) throw SchemaError("/actions/" + n + "/acting", "expected \"" + ref_name(d, acting) + "\"");
  if (c != ref_name(d, carrier)) throw SchemaError("/actions/" + n + "/carrier", "expected \"" + ref_name(d, carrier) + "\"");
}

void require_side(Side s, Side want, std::string const& name) {
  if (s != want) throw SchemaError("/actions/" + name + "/side", want == Side::Left ? "expected left" : "expected right");
}

struct Params {
  int degree;
  int weight_bound;
  bool order;
};

Params params(InputDocument const& d, Options const& o) {
  Params p{o.degree.value_or(d.pipeline.degree.value_or(3)), o.weight_bound.value_or(d.pipeline.weight_bound.value_or(3)),
           o.order_constraint && d.pipeline.order_constraint.value_or(true)};
  if (p.degree < 1) throw SchemaError("/pipeline/degree", "degree must be at least 1");
  if (p.weight_bound < 0) throw SchemaError("/pipeline/weight_bound", "weight bound must be non-negative");
  return p;
}

MatchedPairLie lie_pair(InputDocument const& d) {
  MatchedPairLie p;
  p.g = lookup(d, d.hom_lie, "g", "a Hom-Lie algebra");
  p.h = lookup(d, d.hom_lie, "h", "a Hom-Lie algebra");
  p.left = lookup(d, d.lie_actions, "left", "a Hom-Lie action");
  p.right = lookup(d, d.lie_actions, "right", "a Hom-Lie action");
  require_link(d, "left", "h", "g");
  require_link(d, "right", "g", "h");
  require_side(p.left.side, Side::Left, ref_name(d, "left"));
  require_side(p.right.side, Side::Right, ref_name(d, "right"));
  return p;
}

// Matched pair of Hom-Hopf algebras, either given by tables or lifted from a
// matched pair of Hom-Lie algebras.  Returns nullopt when a Lie-level
// section already failed.
std::optional<MatchedPairHopf> matched_pair(InputDocument const& d, Params const& p, RunReport& r) {
  if (d.pipeline.refs.count("g")) {
    MatchedPairLie const lp = lie_pair(d);
    r.parameters["degree"] = p.degree;
    r.parameters["weight_bound"] = p.weight_bound;
    r.sections.push_back({"lie", check_matched_pair_lie(lp)});
    if (!r.sections.back().checks.passed()) return std::nullopt;
    TruncatedUEA const ug(lp.g, p.degree, p.weight_bound);
    TruncatedUEA const uh(lp.h, p.degree, p.weight_bound);
    r.dims.push_back({"g", ug.dims()});
    r.dims.push_back({"h", uh.dims()});
    LiftedActions const lifted(lp, ug, uh);
    r.sections.push_back({"well-defined", lifted.check_well_defined()});
    return MatchedPairHopf{ug.hopf(), uh.hopf(), lifted.left_action(), lifted.right_action()};
  }
  MatchedPairHopf m{lookup(d, d.hopf, "u", "a Hom-Hopf algebra"), lookup(d, d.hopf, "v", "a Hom-Hopf algebra"),
                    lookup(d, d.actions, "left", "a Hom-Hopf action"), lookup(d, d.actions, "right", "a Hom-Hopf action")};
  require_link(d, "left", "v", "u");
  require_link(d, "right", "u", "v");
  require_side(m.left.side, Side::Left, ref_name(d, "left"));
  require_side(m.right.side, Side::Right, ref_name(d, "right"));
  return m;
}

void verify_hopf(InputDocument const& d, Options const&, RunReport& r) {
  HomHopf const& h = lookup(d, d.hopf, "hopf", "a Hom-Hopf algebra");
  r.sections.push_back({"hopf", check_hom_hopf(h)});
}

void build_uea(InputDocument const& d, Options const& o, RunReport& r) {
  Params const p = params(d, o);
  HomLie const& g = lookup(d, d.hom_lie, "lie", "a Hom-Lie algebra");
  r.parameters["degree"] = p.degree;
  r.parameters["weight_bound"] = p.weight_bound;
  r.sections.push_back({"hom-lie", check_hom_lie(g)});
  TruncatedUEA const u(g, p.degree, p.weight_bound);
  r.dims.push_back({"uea", u.dims()});
  r.sections.push_back({"ideal", check_ideal_membership(u)});
  r.sections.push_back({"uea", check_hom_hopf(u.hopf())});
  r.structures.push_back({"uea", u.hopf()});
}

void matched_pair_check(InputDocument const& d, Options const& o, RunReport& r) {
  auto const m = matched_pair(d, params(d, o), r);
  if (m) r.sections.push_back({"matched", check_matched_pair_hopf(*m)});
}

void doublecross(InputDocument const& d, Options const& o, RunReport& r) {
  auto const m = matched_pair(d, params(d, o), r);
  if (!m) return;
  r.sections.push_back({"matched", check_matched_pair_hopf(*m)});
  if (!r.sections.back().checks.passed()) return;
  HomHopf const dcp = build_double_cross_product(*m, false);
  r.sections.push_back({"double-cross", check_hom_hopf(dcp)});
  r.structures.push_back({"double-cross", dcp});
}

void bicross(InputDocument const& d, Options const&, RunReport& r) {
  MutualPairHopf const m{lookup(d, d.hopf, "f", "a Hom-Hopf algebra"), lookup(d, d.hopf, "u", "a Hom-Hopf algebra"),
                         lookup(d, d.actions, "action", "a Hom-Hopf action"),
                         lookup(d, d.coactions, "coaction", "a coaction")};
  require_link(d, "action", "u", "f");
  require_link(d, "coaction", "f", "u");
  require_side(m.action.side, Side::Left, ref_name(d, "action"));
  r.sections.push_back({"mutual", check_mutual_pair(m)});
  if (!r.sections.back().checks.passed()) return;
  HomHopf const b = build_bicrossproduct(m, false);
  r.sections.push_back({"bicross", check_hom_hopf(b)});
  r.structures.push_back({"bicross", b});
}

void semidualize_cmd(InputDocument const& d, Options const& o, RunReport& r) {
  Params const p = params(d, o);
  r.parameters["order_constraint"] = p.order;
  auto const m = matched_pair(d, p, r);
  if (!m) return;
  r.sections.push_back({"matched", check_matched_pair_hopf(*m)});
  MutualPairHopf const mu = semidualize(*m, SemidualConfig{p.order});
  r.sections.push_back({"mutual", check_mutual_pair(mu)});
  r.structures.push_back({"dual", mu.f});
}

void hom_lie_hopf(InputDocument const& d, Options const& o, RunReport& r) {
  Params const p = params(d, o);
  r.parameters["degree"] = p.degree;
  r.parameters["weight_bound"] = p.weight_bound;
  r.parameters["order_constraint"] = p.order;
  HomLieHopfResult const h = build_hom_lie_hopf(lie_pair(d), p.degree, p.weight_bound, SemidualConfig{p.order});
  r.dims.push_back({"g", h.dims_g});
  r.dims.push_back({"h", h.dims_h});
  r.sections.push_back({"lie", h.lie});
  r.sections.push_back({"well-defined", h.well_defined});
  r.sections.push_back({"matched", h.matched});
  r.sections.push_back({"mutual", h.mutual});
  r.sections.push_back({"bicross", h.bicross});
  r.structures.push_back({"bicross", h.bicrossproduct});
}

bool is_input_error(Errc c) {
  return c == Errc::SchemaError || c == Errc::InverseMismatch || c == Errc::UnknownBasisIndex;
}

}  // namespace

RunReport run(InputDocument const& doc, Options const& opts) {
  RunReport r;
  r.command = opts.command.empty() ? doc.pipeline.command : opts.command;
  auto const t0 = std::chrono::steady_clock::now();
  try {
    if (r.command == "verify-hopf") verify_hopf(doc, opts, r);
    else if (r.command == "build-uea") build_uea(doc, opts, r);
    else if (r.command == "matched-pair-check") matched_pair_check(doc, opts, r);
    else if (r.command == "doublecross") doublecross(doc, opts, r);
    else if (r.command == "bicross") bicross(doc, opts, r);
    else if (r.command == "semidualize") semidualize_cmd(doc, opts, r);
    else if (r.command == "hom-lie-hopf") hom_lie_hopf(doc, opts, r);
    else throw SchemaError("/pipeline/command", "unknown command \"" + r.command + "\"");
  } catch (SchemaError const& e) {
    r.error = ErrorInfo{"SchemaError", e.detail(), e.pointer()};
    r.input_error = true;
  } catch (Error const& e) {
    r.error = ErrorInfo{errc_name(e.code()), e.what(), ""};
    r.input_error = is_input_error(e.code());
  }
  if (opts.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace homhopf::cli
