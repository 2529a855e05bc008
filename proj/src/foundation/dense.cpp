#include "homhopf/dense.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace homhopf {

Rational parse_rational(std::string const& text) {
  auto const b = text.find_first_not_of(" \t");
  auto const e = text.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty rational");
  std::string s = text.substr(b, e - b + 1);
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw std::invalid_argument("not a rational: " + text);
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

DenseMatrix identity_matrix(int n) {
  DenseMatrix m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

// Reduces the augmented matrix in place; returns pivot columns.
std::vector<int> gauss_jordan(DenseMatrix& m, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  int const nrows = static_cast<int>(m.size());
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int p = row;
    while (p < nrows && m[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[row]);
    Rational const inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational const f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<DenseMatrix> dense_inverse(DenseMatrix m) {
  int const n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    m[i].resize(2 * n, 0);
    m[i][n + i] = 1;
  }
  if (static_cast<int>(gauss_jordan(m, n).size()) != n) return std::nullopt;
  DenseMatrix inv(n);
  for (int i = 0; i < n; ++i) inv[i].assign(m[i].begin() + n, m[i].end());
  return inv;
}

int dense_rank(DenseMatrix m) {
  int const cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  return static_cast<int>(gauss_jordan(m, cols).size());
}

LinearSolution solve_linear(DenseMatrix a, std::vector<Rational> b) {
  LinearSolution out;
  out.unknowns = a.empty() ? 0 : static_cast<int>(a[0].size());
  int const n = out.unknowns;
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto const pivots = gauss_jordan(a, n);
  out.rank = static_cast<int>(pivots.size());
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (a[r][n] != 0) return out;
  std::vector<Rational> x(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][n];
  out.particular = std::move(x);
  return out;
}

}  // namespace homhopf
