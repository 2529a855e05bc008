#include "homhopf/check_report.hpp"

#include <map>

namespace homhopf {

namespace detail {

bool has_dual_bound(std::vector<Slot> const& slots) {
  for (auto const& s : slots)
    if (s.grading && s.grading->has_dual_bound()) return true;
  return false;
}

bool within_dual_bound(std::vector<Slot> const& slots, Index const& key) {
  int total = 0;
  int bound = -1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    Grading const* g = slots[i].grading;
    if (!g || !g->has_dual_bound()) continue;
    total += g->dual_degree.at(key[i]);
    bound = bound < 0 ? g->bound : std::min(bound, g->bound);
  }
  return bound < 0 || total <= bound;
}

}  // namespace detail

char const* errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownBasisIndex: return "UnknownBasisIndex";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NotEndomorphism: return "NotEndomorphism";
    case Errc::NotCommutingPair: return "NotCommutingPair";
    case Errc::NotBialgebraMorphism: return "NotBialgebraMorphism";
    case Errc::AntipodeNotInvertible: return "AntipodeNotInvertible";
    case Errc::NotInvertibleAlpha: return "NotInvertibleAlpha";
    case Errc::NotInvertibleBeta: return "NotInvertibleBeta";
    case Errc::NotInvertibleGamma: return "NotInvertibleGamma";
    case Errc::NotLieEndomorphism: return "NotLieEndomorphism";
    case Errc::NotHomLie: return "NotHomLie";
    case Errc::NotMatchedPair: return "NotMatchedPair";
    case Errc::NotMutualPair: return "NotMutualPair";
    case Errc::PairingDegenerate: return "PairingDegenerate";
    case Errc::OrderConstraintViolated: return "OrderConstraintViolated";
    case Errc::TruncationOverflow: return "TruncationOverflow";
    case Errc::InverseMismatch: return "InverseMismatch";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

void CheckReport::merge(CheckReport const& other) {
  equations.insert(equations.end(), other.equations.begin(), other.equations.end());
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

void CheckReport::merge(CheckReport const& other, std::string const& prefix) {
  for (auto e : other.equations) {
    e.id = prefix + e.id;
    equations.push_back(std::move(e));
  }
  for (auto v : other.violations) {
    v.equation = prefix + v.equation;
    violations.push_back(std::move(v));
  }
}

EquationStat const* CheckReport::find(std::string const& id) const {
  for (auto const& e : equations)
    if (e.id == id) return &e;
  return nullptr;
}

bool CheckReport::failed(std::string const& id) const {
  for (auto const& e : equations)
    if (e.id == id && e.failed > 0) return true;
  return false;
}

std::size_t CheckReport::tuples_checked() const {
  std::size_t n = 0;
  for (auto const& e : equations) n += e.checked;
  return n;
}

std::size_t CheckReport::tuples_skipped() const {
  std::size_t n = 0;
  for (auto const& e : equations) n += e.skipped;
  return n;
}

std::size_t CheckReport::failure_count() const {
  std::size_t n = 0;
  for (auto const& e : equations) n += e.failed;
  return n;
}

std::vector<std::string> CheckReport::failed_equations() const {
  std::vector<std::string> out;
  for (auto const& e : equations)
    if (e.failed > 0) out.push_back(e.id);
  return out;
}

void CheckReport::record(std::string const& id, std::size_t checked, std::vector<Index> const& failing) {
  equations.push_back({id, checked, 0, failing.size()});
  for (std::size_t i = 0; i < failing.size() && i < kStoredPerEquation; ++i)
    violations.push_back({id, failing[i], Tensor{}, Tensor{}});
}

std::string CheckReport::summary() const {
  if (passed())
    return "ALL CHECKS PASSED (" + std::to_string(equations.size()) + " equations, " +
           std::to_string(tuples_checked()) + " tuples)";
  return std::to_string(failure_count()) + " VIOLATIONS in " + std::to_string(failed_equations().size()) +
         " of " + std::to_string(equations.size()) + " equations";
}

}  // namespace homhopf
