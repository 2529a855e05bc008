#pragma once

#include "homhopf/error.hpp"
#include "homhopf/tensor.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace homhopf {

// Truncation data attached to a basis.  `degree` is the filtration degree of
// each basis vector of a truncated algebra.  `dual_degree` marks a space of
// functionals known exactly only up to `bound`: coefficients of a tensor are
// trusted when the dual degrees of its legs sum to at most `bound`.
struct Grading {
  std::vector<int> degree;
  std::vector<int> dual_degree;
  int bound = -1;

  bool has_dual_bound() const { return bound >= 0 && !dual_degree.empty(); }
};

struct Violation {
  std::string equation;
  Index witness;  // basis tuple the equation was evaluated on
  Tensor lhs;
  Tensor rhs;
};

struct EquationStat {
  std::string id;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // tuples outside the truncation window
  std::size_t failed = 0;
};

class CheckReport {
 public:
  static constexpr std::size_t kStoredPerEquation = 4;

  bool passed() const { return violations.empty(); }
  void merge(CheckReport const& other);
  // Merges with every equation id written as prefix + id.
  void merge(CheckReport const& other, std::string const& prefix);
  EquationStat const* find(std::string const& id) const;
  bool failed(std::string const& id) const;
  std::size_t tuples_checked() const;
  std::size_t tuples_skipped() const;
  std::size_t failure_count() const;
  std::vector<std::string> failed_equations() const;
  std::string summary() const;

  // Records a pass/fail equation evaluated outside check_equation, for
  // instance a membership test; each failing witness becomes a violation.
  void record(std::string const& id, std::size_t checked, std::vector<Index> const& failing);

  std::vector<EquationStat> equations;
  std::vector<Violation> violations;  // at most kStoredPerEquation per equation
};

// One tensor slot of an equation's inputs or outputs.
struct Slot {
  int dim = 0;
  Grading const* grading = nullptr;
};

namespace detail {
bool within_dual_bound(std::vector<Slot> const& slots, Index const& key);
bool has_dual_bound(std::vector<Slot> const& slots);
}  // namespace detail

// Evaluates f on every basis tuple of the input slots and records whether the
// two sides agree.  Tuples on which a product leaves the truncation window
// are counted as skipped.  When some output slot carries a dual bound only the
// trusted coefficients are compared.
template <class F>
void check_equation(CheckReport& report, std::string const& id, std::vector<Slot> const& in,
                    std::vector<Slot> const& out, F&& f) {
  EquationStat stat;
  stat.id = id;
  std::size_t stored = 0;
  bool const in_bound = detail::has_dual_bound(in);
  bool const out_bound = detail::has_dual_bound(out);
  for (auto const& s : in)
    if (s.dim == 0) {
      report.equations.push_back(stat);
      return;
    }
  Index idx(in.size(), 0);
  bool more = true;
  while (more) {
    if (in_bound && !detail::within_dual_bound(in, idx)) {
      ++stat.skipped;
    } else {
      try {
        auto [lhs, rhs] = f(std::as_const(idx));
        Tensor diff = lhs - rhs;
        bool bad = false;
        for (auto const& [k, c] : diff)
          if (!out_bound || detail::within_dual_bound(out, k)) {
            bad = true;
            break;
          }
        ++stat.checked;
        if (bad) {
          ++stat.failed;
          if (stored++ < CheckReport::kStoredPerEquation)
            report.violations.push_back({id, idx, std::move(lhs), std::move(rhs)});
        }
      } catch (TruncationOverflow const&) {
        ++stat.skipped;
      }
    }
    more = false;
    for (std::size_t p = in.size(); p-- > 0;) {
      if (++idx[p] < in[p].dim) {
        more = true;
        break;
      }
      idx[p] = 0;
    }
  }
  report.equations.push_back(stat);
}

}  // namespace homhopf
