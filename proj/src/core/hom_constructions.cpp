#include "homhopf/hom_core.hpp"

#include "homhopf/dense.hpp"
#include "homhopf/error.hpp"

#include <map>

namespace homhopf {

namespace {

bool is_multiplicative(HomAlgebra const& a, LinearOperator const& t) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      auto const& e = a.table[static_cast<std::size_t>(i) * a.dim + j];
      if (e && t(*e) != a.mul(t(i), t(j))) return false;
    }
  return t(a.unit) == a.unit;
}

bool is_comultiplicative(HomCoalgebra const& c, LinearOperator const& t) {
  for (int i = 0; i < c.dim; ++i) {
    Tensor const lhs = comul_at(tensor_of(t(i)), 0, c);
    Tensor const rhs = op_at(op_at(c.comult[i], 0, t), 1, t);
    if (lhs != rhs || c.eps(t(i)) != c.counit[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<HomInverse> hom_inverse(HomAlgebra const& a, Vec const& x, int n_max) {
  LinearOperator pw = LinearOperator::identity(a.dim);
  for (int n = 0; n <= n_max; ++n, pw = a.alpha.compose(pw)) {
    DenseMatrix m(2 * a.dim, std::vector<Rational>(a.dim, 0));
    std::vector<Rational> rhs(2 * a.dim, 0);
    for (int j = 0; j < a.dim; ++j) {
      Vec const left = pw(a.mul(x, basis_vec(j)));
      Vec const right = pw(a.mul(basis_vec(j), x));
      for (auto const& [i, c] : left) m[i][j] = c;
      for (auto const& [i, c] : right) m[a.dim + i][j] = c;
    }
    for (auto const& [i, c] : a.unit) {
      rhs[i] = c;
      rhs[a.dim + i] = c;
    }
    auto sol = solve_linear(m, rhs);
    if (sol.particular) {
      HomInverse out{n, {}};
      for (int j = 0; j < a.dim; ++j) out.inverse.add(j, (*sol.particular)[j]);
      return out;
    }
  }
  return std::nullopt;
}

HomAlgebra convolution_algebra(HomCoalgebra const& c, HomAlgebra const& a) {
  int const cd = c.dim;
  int const n = a.dim * cd;
  LinearOperator const bm2 = c.beta.power(-2);
  LinearOperator const bm1 = c.beta.inverse();
  // (p, q) -> [(k, coefficient of e_p ⊗ e_q in (beta^-2 ⊗ beta^-2) Delta(e_k))]
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> split;
  for (int k = 0; k < cd; ++k) {
    Tensor const d = op_at(op_at(c.comult[k], 0, bm2), 1, bm2);
    for (auto const& [key, coef] : d) split[{key[0], key[1]}].push_back({k, coef});
  }
  HomAlgebra out;
  out.dim = n;
  out.multiplicative = a.multiplicative;
  out.table = tabulate(n, n, [&](int f, int g) {
    Vec r;
    auto it = split.find({f % cd, g % cd});
    if (it == split.end()) return r;
    Vec const prod = a.mul(f / cd, g / cd);
    for (auto const& [k, coef] : it->second)
      for (auto const& [i, x] : prod) r.add(i * cd + k, coef * x);
    return r;
  });
  for (int k = 0; k < cd; ++k)
    for (auto const& [i, x] : a.unit) out.unit.add(i * cd + k, c.counit[k] * x);
  std::vector<Vec> cols(n);
  for (int f = 0; f < n; ++f) {
    int const ai = f / cd;
    int const ci = f % cd;
    for (int k = 0; k < cd; ++k) {
      Rational const w = bm1(k).coeff(ci);
      if (w == 0) continue;
      for (auto const& [i, x] : a.alpha(ai)) cols[f].add(i * cd + k, w * x);
    }
  }
  out.alpha = LinearOperator(std::move(cols));
  return out;
}

Vec as_convolution_element(LinearOperator const& f, int c_dim) {
  Vec v;
  for (int j = 0; j < c_dim; ++j)
    for (auto const& [i, x] : f(j)) v.add(i * c_dim + j, x);
  return v;
}

ConvolutionInverse convolution_inverse_of_identity(HomHopf const& h) {
  HomAlgebra const conv = convolution_algebra(h.coalg, h.alg);
  int const n = conv.dim;
  Vec const id = as_convolution_element(LinearOperator::identity(h.dim()), h.dim());
  DenseMatrix m(2 * n, std::vector<Rational>(n, 0));
  std::vector<Rational> rhs(2 * n, 0);
  for (int j = 0; j < n; ++j) {
    for (auto const& [i, x] : conv.mul(basis_vec(j), id)) m[i][j] = x;
    for (auto const& [i, x] : conv.mul(id, basis_vec(j))) m[n + i][j] = x;
  }
  for (auto const& [i, x] : conv.unit) {
    rhs[i] = x;
    rhs[n + i] = x;
  }
  LinearSolution const sol = solve_linear(m, rhs);
  ConvolutionInverse out;
  out.consistent = sol.particular.has_value();
  out.unique = sol.unique();
  if (out.unique) {
    std::vector<Vec> cols(h.dim());
    for (int f = 0; f < n; ++f) cols[f % h.dim()].add(f / h.dim(), (*sol.particular)[f]);
    out.solution = LinearOperator(std::move(cols));
  }
  return out;
}

CheckReport check_convolution_inverse(HomHopf const& h) {
  CheckReport r;
  ConvolutionInverse const ci = convolution_inverse_of_identity(h);
  auto flag = [](bool b) {
    Tensor t;
    t.add(Index{}, b ? 1 : 0);
    return t;
  };
  using Pair = std::pair<Tensor, Tensor>;
  check_equation(r, "convolution-inverse-exists", {}, {}, [&](Index const&) {
    return Pair{flag(ci.consistent), flag(true)};
  });
  check_equation(r, "convolution-inverse-unique", {}, {}, [&](Index const&) {
    return Pair{flag(ci.unique), flag(true)};
  });
  if (ci.solution) {
    check_equation(r, "convolution-inverse-is-antipode", {Slot{h.dim()}}, {Slot{h.dim()}}, [&](Index const& i) {
      return Pair{tensor_of((*ci.solution)(i[0])), tensor_of(h.antipode(i[0]))};
    });
  }
  return r;
}

HomAlgebra twist_algebra(HomAlgebra const& a, LinearOperator const& twist) {
  if (!is_multiplicative(a, twist)) throw Error(Errc::NotEndomorphism, "twist is not an algebra endomorphism");
  if (twist.compose(a.alpha) != a.alpha.compose(twist))
    throw Error(Errc::NotCommutingPair, "twist does not commute with alpha");
  HomAlgebra out = a;
  for (auto& e : out.table)
    if (e) e = twist(*e);
  out.alpha = twist.compose(a.alpha);
  return out;
}

HomHopf hopf_twist(HomHopf const& classical, LinearOperator const& a, LinearOperator const& b) {
  validate(classical);
  int const n = classical.dim();
  if (!classical.alg.alpha.is_identity() || !classical.coalg.beta.is_identity())
    throw Error(Errc::SchemaError, "hopf_twist expects identity twists on the input");
  for (auto const* t : {&a, &b}) {
    if (t->dim() != n) throw Error(Errc::SchemaError, "twist has wrong dimension");
    if (!is_multiplicative(classical.alg, *t) || !is_comultiplicative(classical.coalg, *t))
      throw Error(Errc::NotBialgebraMorphism, "twist is not a bialgebra endomorphism");
  }
  if (a.compose(b) != b.compose(a)) throw Error(Errc::NotCommutingPair, "twists do not commute");
  HomHopf h = classical;
  for (auto& e : h.alg.table)
    if (e) e = a(*e);
  h.alg.alpha = a;
  h.alg.multiplicative = true;
  for (int i = 0; i < n; ++i) h.coalg.comult[i] = comul_at(tensor_of(b(i)), 0, classical.coalg);
  h.coalg.beta = b;
  return h;
}

OpCopVariants op_cop_variants(HomHopf const& h) {
  if (!h.antipode.is_invertible()) throw Error(Errc::AntipodeNotInvertible, "antipode is singular");
  LinearOperator const s_inv = h.antipode.inverse();
  int const n = h.dim();
  HomHopf op = h;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      op.alg.table[static_cast<std::size_t>(i) * n + j] = h.alg.table[static_cast<std::size_t>(j) * n + i];
  op.antipode = s_inv;
  HomHopf cop = h;
  for (auto& t : cop.coalg.comult) t = permute(t, {1, 0});
  cop.antipode = s_inv;
  HomHopf op_cop = op;
  op_cop.coalg = cop.coalg;
  op_cop.antipode = h.antipode;
  return {op, cop, op_cop};
}

}  // namespace homhopf
