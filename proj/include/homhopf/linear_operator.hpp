#pragma once

#include "homhopf/dense.hpp"
#include "homhopf/lincomb.hpp"

#include <memory>
#include <vector>

namespace homhopf {

// Endomorphism of a finite-dimensional space, stored by the images of the
// basis vectors.  The inverse is computed on demand and cached.
class LinearOperator {
 public:
  LinearOperator() = default;
  explicit LinearOperator(std::vector<Vec> columns);

  static LinearOperator identity(int n);
  static LinearOperator scalar(int n, Rational const& s);
  // m[i][j] is the coefficient of e_i in the image of e_j.
  static LinearOperator from_matrix(DenseMatrix const& m);
  // Checks that the declared inverse really is one (Errc::InverseMismatch).
  static LinearOperator with_inverse(std::vector<Vec> columns, std::vector<Vec> inverse);

  int dim() const { return static_cast<int>(cols_.size()); }
  Vec const& operator()(int j) const { return cols_.at(j); }
  Vec operator()(Vec const& v) const;
  std::vector<Vec> const& columns() const { return cols_; }

  bool is_invertible() const;
  LinearOperator inverse() const;  // throws Errc::NotInvertible
  LinearOperator power(int k) const;
  LinearOperator compose(LinearOperator const& inner) const;  // *this after inner
  LinearOperator transpose() const;
  bool is_identity() const;
  DenseMatrix matrix() const;

  friend bool operator==(LinearOperator const& a, LinearOperator const& b) { return a.cols_ == b.cols_; }

 private:
  std::vector<Vec> cols_;
  mutable std::shared_ptr<std::vector<Vec> const> inv_;
  mutable bool inv_known_ = false;
};

}  // namespace homhopf
