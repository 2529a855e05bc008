#include "homhopf/linear_operator.hpp"

#include "homhopf/error.hpp"

#include <string>

namespace homhopf {

LinearOperator::LinearOperator(std::vector<Vec> columns) : cols_(std::move(columns)) {
  for (auto const& c : cols_)
    for (auto const& [i, x] : c)
      if (i < 0 || i >= dim())
        throw Error(Errc::UnknownBasisIndex, "operator image uses basis index " + std::to_string(i));
}

LinearOperator LinearOperator::identity(int n) { return scalar(n, 1); }

LinearOperator LinearOperator::scalar(int n, Rational const& s) {
  std::vector<Vec> cols(n);
  for (int i = 0; i < n; ++i) cols[i].add(i, s);
  return LinearOperator(std::move(cols));
}

LinearOperator LinearOperator::from_matrix(DenseMatrix const& m) {
  int const n = static_cast<int>(m.size());
  std::vector<Vec> cols(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw Error(Errc::SchemaError, "operator matrix is not square");
    for (int j = 0; j < n; ++j) cols[j].add(i, m[i][j]);
  }
  return LinearOperator(std::move(cols));
}

LinearOperator LinearOperator::with_inverse(std::vector<Vec> columns, std::vector<Vec> inverse) {
  LinearOperator a(std::move(columns));
  LinearOperator b(std::move(inverse));
  if (a.dim() != b.dim() || !a.compose(b).is_identity() || !b.compose(a).is_identity())
    throw Error(Errc::InverseMismatch, "declared inverse does not invert the operator");
  a.inv_ = std::make_shared<std::vector<Vec> const>(b.cols_);
  a.inv_known_ = true;
  return a;
}

Vec LinearOperator::operator()(Vec const& v) const {
  Vec out;
  for (auto const& [j, c] : v) out.add_scaled(cols_.at(j), c);
  return out;
}

DenseMatrix LinearOperator::matrix() const {
  DenseMatrix m(dim(), std::vector<Rational>(dim(), 0));
  for (int j = 0; j < dim(); ++j)
    for (auto const& [i, c] : cols_[j]) m[i][j] = c;
  return m;
}

bool LinearOperator::is_invertible() const {
  if (!inv_known_) {
    inv_known_ = true;
    if (auto inv = dense_inverse(matrix())) inv_ = std::make_shared<std::vector<Vec> const>(from_matrix(*inv).cols_);
  }
  return inv_ != nullptr;
}

LinearOperator LinearOperator::inverse() const {
  if (!is_invertible()) throw Error(Errc::NotInvertible, "operator is singular");
  LinearOperator out(*inv_);
  out.inv_ = std::make_shared<std::vector<Vec> const>(cols_);
  out.inv_known_ = true;
  return out;
}

LinearOperator LinearOperator::power(int k) const {
  LinearOperator base = k < 0 ? inverse() : *this;
  LinearOperator out = identity(dim());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = base.compose(out);
  return out;
}

LinearOperator LinearOperator::compose(LinearOperator const& inner) const {
  std::vector<Vec> cols;
  cols.reserve(inner.dim());
  for (auto const& c : inner.cols_) cols.push_back((*this)(c));
  return LinearOperator(std::move(cols));
}

LinearOperator LinearOperator::transpose() const {
  std::vector<Vec> cols(dim());
  for (int j = 0; j < dim(); ++j)
    for (auto const& [i, c] : cols_[j]) cols[i].add(j, c);
  return LinearOperator(std::move(cols));
}

bool LinearOperator::is_identity() const { return *this == identity(dim()); }

}  // namespace homhopf
