#pragma once

#include "homhopf/check_report.hpp"
#include "homhopf/hom_structures.hpp"

#include <optional>

namespace homhopf {

// Axiom suites.  Every equation is evaluated on all basis tuples and reported
// under its own id; nothing is thrown for a failed equation.
CheckReport check_hom_algebra(HomAlgebra const& a, Grading const* g = nullptr);
CheckReport check_hom_coalgebra(HomCoalgebra const& c, Grading const* g = nullptr);
CheckReport check_hom_bialgebra(HomBialgebra const& b);
CheckReport check_hom_hopf(HomHopf const& h);
CheckReport check_antipode(HomHopf const& h);          // axioms only
CheckReport check_antipode_derived(HomHopf const& h);  // consequences, reported separately

CheckReport check_hom_module(ActionData const& m, HomAlgebra const& acting, Grading const* acting_g = nullptr,
                             Grading const* carrier_g = nullptr);
CheckReport check_hom_comodule(CoactionData const& m, HomCoalgebra const& c, Grading const* carrier_g = nullptr,
                               Grading const* coalg_g = nullptr);

// Smallest n <= n_max with alpha^n(x y) = alpha^n(y x) = eta, together with y.
struct HomInverse {
  int n = 0;
  Vec inverse;
};
std::optional<HomInverse> hom_inverse(HomAlgebra const& a, Vec const& x, int n_max = 4);

// Hom(C, A) with convolution product mu (f ⊗ g)(beta^-2 ⊗ beta^-2) Delta,
// twist f -> alpha f beta^-1 and unit eta epsilon.  Basis element
// a_index * c.dim + c_index sends e_c to e_a and every other basis vector to 0.
HomAlgebra convolution_algebra(HomCoalgebra const& c, HomAlgebra const& a);
Vec as_convolution_element(LinearOperator const& f, int c_dim);

// Solves the two-sided convolution-inverse equations for X in Hom(H, H) with
// the identity on the other side.  Returns the solution when it is unique.
struct ConvolutionInverse {
  bool consistent = false;
  bool unique = false;
  std::optional<LinearOperator> solution;
};
ConvolutionInverse convolution_inverse_of_identity(HomHopf const& h);
CheckReport check_convolution_inverse(HomHopf const& h);

// (A, a mu, eta, a) for an algebra endomorphism a of a Hom-associative algebra
// with alpha = Id.  Throws NotEndomorphism.
HomAlgebra twist_algebra(HomAlgebra const& a, LinearOperator const& twist);

// (H, a mu, eta, a, Delta b, epsilon, b, S) from a Hopf algebra with identity
// twists and commuting bialgebra endomorphisms a, b.
HomHopf hopf_twist(HomHopf const& classical, LinearOperator const& a, LinearOperator const& b);

struct OpCopVariants {
  HomHopf op;
  HomHopf cop;
  HomHopf op_cop;
};
// Throws AntipodeNotInvertible for the op and cop variants.
OpCopVariants op_cop_variants(HomHopf const& h);

}  // namespace homhopf
