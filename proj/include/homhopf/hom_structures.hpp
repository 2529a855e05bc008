#pragma once

#include "homhopf/check_report.hpp"
#include "homhopf/linear_operator.hpp"
#include "homhopf/tensor.hpp"

#include <optional>
#include <vector>

namespace homhopf {

// (A, mu, eta, alpha).  Products outside a truncation window are stored as
// nullopt; mul() then throws TruncationOverflow.
struct HomAlgebra {
  int dim = 0;
  std::vector<std::optional<Vec>> table;  // table[i * dim + j] = e_i e_j
  Vec unit;
  LinearOperator alpha;
  bool multiplicative = true;  // whether alpha(xy) = alpha(x) alpha(y) is required

  Vec mul(int i, int j) const;
  Vec mul(Vec const& x, Vec const& y) const;
};

// (C, Delta, epsilon, beta).
struct HomCoalgebra {
  int dim = 0;
  std::vector<Tensor> comult;  // arity-2 tensors
  std::vector<Rational> counit;
  LinearOperator beta;

  Rational eps(Vec const& v) const;
};

struct HomBialgebra {
  HomAlgebra alg;
  HomCoalgebra coalg;
  Grading grading;

  int dim() const { return alg.dim; }
};

struct HomHopf : HomBialgebra {
  LinearOperator antipode;
};

enum class Side { Left, Right };

// Action of an algebra on a carrier space.  Left actions read (acting,
// carrier), right actions (carrier, acting); the table is always indexed
// [acting * carrier_dim + carrier].  gamma is the Hom-module structure map.
struct ActionData {
  Side side = Side::Left;
  int acting_dim = 0;
  int carrier_dim = 0;
  std::vector<std::optional<Vec>> table;
  LinearOperator gamma;

  Vec act(int acting, int carrier) const;
};

// Right coaction carrier -> carrier ⊗ coalgebra with structure map theta.
struct CoactionData {
  int carrier_dim = 0;
  int coalgebra_dim = 0;
  std::vector<Tensor> table;
  LinearOperator theta;
};

// Slot-level maps for the tensor engine.
Tensor op_at(Tensor const& t, std::size_t pos, LinearOperator const& op);
Tensor mul_at(Tensor const& t, std::size_t pos, HomAlgebra const& a);
Tensor unit_at(Tensor const& t, std::size_t pos, HomAlgebra const& a);
Tensor comul_at(Tensor const& t, std::size_t pos, HomCoalgebra const& c);
Tensor counit_at(Tensor const& t, std::size_t pos, HomCoalgebra const& c);
Tensor act_at(Tensor const& t, std::size_t pos, ActionData const& a);
Tensor coact_at(Tensor const& t, std::size_t pos, CoactionData const& c);

// Tables built from a bilinear rule; overflow entries become nullopt.
template <class F>
std::vector<std::optional<Vec>> tabulate(int rows, int cols, F&& f) {
  std::vector<std::optional<Vec>> t(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      try {
        t[static_cast<std::size_t>(i) * cols + j] = f(i, j);
      } catch (TruncationOverflow const&) {
      }
    }
  return t;
}

// Shape validation shared by constructors and the input reader.
void validate(HomAlgebra const& a);
void validate(HomCoalgebra const& c);
void validate(HomHopf const& h);

}  // namespace homhopf
