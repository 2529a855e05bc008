#include "homhopf/cli.hpp"

#include <iomanip>
#include <sstream>

namespace homhopf::cli {

namespace {

using nlohmann::ordered_json;

ordered_json vec_json(Vec const& v) {
  ordered_json a = ordered_json::array();
  for (auto const& [i, c] : v) a.push_back({i, to_string(c)});
  return a;
}

ordered_json op_json(LinearOperator const& op) {
  if (op.is_identity()) return "id";
  ordered_json cols = ordered_json::array();
  for (auto const& c : op.columns()) cols.push_back(vec_json(c));
  return {{"columns", cols}};
}

// Each term as [i1, ..., ik, "p/q"].
ordered_json tensor_json(Tensor const& t) {
  ordered_json a = ordered_json::array();
  for (auto const& [k, c] : t) {
    ordered_json e = ordered_json::array();
    for (int i : k) e.push_back(i);
    e.push_back(to_string(c));
    a.push_back(e);
  }
  return a;
}

std::string tensor_text(Tensor const& t) {
  if (t.empty()) return "0";
  std::string s;
  for (auto const& [k, c] : t) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*[";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    s += "]";
  }
  return s;
}

std::string coverage(EquationStat const& e) {
  std::size_t const total = e.checked + e.skipped;
  return total == 0 ? "1/1" : to_string(Rational(static_cast<unsigned long>(e.checked), static_cast<unsigned long>(total)));
}

std::string witness_text(Index const& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace

bool RunReport::passed() const {
  if (error) return false;
  for (auto const& s : sections)
    if (!s.checks.passed()) return false;
  return true;
}

int RunReport::exit_code() const {
  if (error && input_error) return 2;
  return passed() ? 0 : 1;
}

CheckReport RunReport::combined() const {
  CheckReport r;
  for (auto const& s : sections) r.merge(s.checks, s.name + "/");
  return r;
}

ordered_json hopf_to_json(HomHopf const& h) {
  int const n = h.dim();
  ordered_json j;
  j["dim"] = n;
  ordered_json mul = ordered_json::array();
  ordered_json overflow = ordered_json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto const& e = h.alg.table[static_cast<std::size_t>(a) * n + b];
      if (!e) overflow.push_back({a, b});
      else if (!e->empty()) mul.push_back({a, b, vec_json(*e)});
    }
  j["mul"] = mul;
  if (!overflow.empty()) j["overflow"] = overflow;
  j["unit"] = vec_json(h.alg.unit);
  j["alpha"] = op_json(h.alg.alpha);
  if (!h.alg.multiplicative) j["multiplicative"] = false;
  ordered_json comul = ordered_json::array();
  for (auto const& t : h.coalg.comult) comul.push_back(tensor_json(t));
  j["comul"] = comul;
  ordered_json counit = ordered_json::array();
  for (auto const& c : h.coalg.counit) counit.push_back(to_string(c));
  j["counit"] = counit;
  j["beta"] = op_json(h.coalg.beta);
  j["antipode"] = op_json(h.antipode);
  if (!h.grading.degree.empty()) j["degree"] = h.grading.degree;
  if (!h.grading.dual_degree.empty()) j["dual_degree"] = h.grading.dual_degree;
  if (h.grading.bound >= 0) j["bound"] = h.grading.bound;
  return j;
}

ordered_json report_to_json(RunReport const& r) {
  ordered_json j;
  j["command"] = r.command;
  j["status"] = r.error ? "error" : r.passed() ? "pass" : "fail";
  j["parameters"] = r.parameters;
  ordered_json dims = ordered_json::object();
  for (auto const& [k, v] : r.dims) dims[k] = v;
  j["dims"] = dims;
  ordered_json sections = ordered_json::array();
  for (auto const& s : r.sections) {
    ordered_json sj;
    sj["name"] = s.name;
    sj["passed"] = s.checks.passed();
    ordered_json eqs = ordered_json::array();
    for (auto const& e : s.checks.equations)
      eqs.push_back({{"id", e.id},
                     {"passed", e.failed == 0},
                     {"checked", e.checked},
                     {"skipped", e.skipped},
                     {"failed", e.failed},
                     {"coverage", coverage(e)}});
    sj["equations"] = eqs;
    ordered_json vs = ordered_json::array();
    for (auto const& v : s.checks.violations)
      vs.push_back({{"equation", v.equation}, {"witness", v.witness}, {"lhs", tensor_json(v.lhs)}, {"rhs", tensor_json(v.rhs)}});
    sj["violations"] = vs;
    sections.push_back(sj);
  }
  j["sections"] = sections;
  ordered_json structures = ordered_json::object();
  for (auto const& [k, h] : r.structures) structures[k] = hopf_to_json(h);
  j["structures"] = structures;
  if (r.error) j["error"] = {{"code", r.error->code}, {"message", r.error->message}, {"pointer", r.error->pointer}};
  j["summary"] = r.error ? "ERROR " + r.error->code : r.combined().summary();
  if (r.seconds >= 0) j["timing_seconds"] = r.seconds;
  return j;
}

std::string report_to_text(RunReport const& r) {
  std::ostringstream out;
  for (auto const& [k, v] : r.dims) {
    out << "dims " << k << ":";
    for (int d : v) out << ' ' << d;
    out << '\n';
  }
  for (auto const& s : r.sections) {
    for (auto const& e : s.checks.equations) {
      out << (e.failed ? "FAIL " : "PASS ") << s.name << '/' << e.id << " (checked " << e.checked << ", skipped "
          << e.skipped;
      if (e.failed) out << ", failed " << e.failed;
      out << ")\n";
    }
    for (auto const& v : s.checks.violations)
      out << "  " << s.name << '/' << v.equation << " at " << witness_text(v.witness) << ": lhs = " << tensor_text(v.lhs)
          << "; rhs = " << tensor_text(v.rhs) << '\n';
  }
  if (r.error) {
    out << "ERROR " << r.error->code;
    if (!r.error->pointer.empty()) out << " at " << r.error->pointer;
    out << ": " << r.error->message << '\n';
  } else {
    out << r.combined().summary() << '\n';
  }
  if (r.seconds >= 0) out << "time " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  return out.str();
}

}  // namespace homhopf::cli
