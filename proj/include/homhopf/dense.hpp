#pragma once

#include "homhopf/rational.hpp"

#include <optional>
#include <vector>

namespace homhopf {

using DenseMatrix = std::vector<std::vector<Rational>>;  // row-major

DenseMatrix identity_matrix(int n);
std::optional<DenseMatrix> dense_inverse(DenseMatrix m);
int dense_rank(DenseMatrix m);

struct LinearSolution {
  std::optional<std::vector<Rational>> particular;  // empty when inconsistent
  int rank = 0;
  int unknowns = 0;
  bool unique() const { return particular && rank == unknowns; }
};

// Solves a x = b by Gauss-Jordan elimination over Q.
LinearSolution solve_linear(DenseMatrix a, std::vector<Rational> b);

}  // namespace homhopf
