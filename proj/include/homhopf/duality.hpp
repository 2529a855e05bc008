#pragma once

#include "homhopf/hom_structures.hpp"

#include <vector>

namespace homhopf {

// All duals use the dual basis {f_i} with f_i(e_j) = [i == j].

// (C*, f ⋆ g = (f ⊗ g)(beta^-2 ⊗ beta^-2) Delta, epsilon, (beta^-1)*).
HomAlgebra dual_algebra_of_coalgebra(HomCoalgebra const& c);

// (A*, delta(f)(a ⊗ a') = f(alpha^-2(a a')), f -> f(eta), (alpha^-1)*).
// Coefficients that would need a product outside a truncation window are
// left out; the dual bound of the resulting grading tells checkers not to
// compare them.
HomCoalgebra dual_coalgebra_of_algebra(HomAlgebra const& a);

// (H*, Delta*, epsilon, (beta^-1)*, delta, eta*, (alpha^-1)*, S*).  For a
// truncated H the dual inherits degree as dual degree with the same bound.
HomHopf dual_hom_hopf(HomHopf const& h);

struct GradedDual {
  std::vector<int> dims;  // dimension per degree 0..N
  HomHopf dual;
};
GradedDual graded_dual(HomHopf const& truncated);

// Coregular actions of A on A* with structure map (alpha^-1)*:
//   (a ▷ f)(a') = f(alpha^-2(a' a)),   (f ◁ a)(a') = f(alpha^-2(a a')).
ActionData coregular_left(HomAlgebra const& a);
ActionData coregular_right(HomAlgebra const& a);

Rational pairing(Vec const& functional, Vec const& v);

}  // namespace homhopf
