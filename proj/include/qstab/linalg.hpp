#pragma once

#include <stdexcept>
#include <vector>

#include "qstab/rational.hpp"

namespace qstab {

using rational_matrix = std::vector<std::vector<rational>>;

struct rref_result {
  rational_matrix mat;         // reduced row echelon form
  std::vector<int> pivot_cols; // ascending
  int rank = 0;
};

// Gauss-Jordan elimination over the rationals.  Pivot rule: columns left to
// right, pivot in the first remaining row with a nonzero entry in that
// column.  Only the first ncols columns are eligible as pivots; any extra
// columns (an augmented right-hand side) are carried along.
inline rref_result reduced_row_echelon(rational_matrix m, int ncols) {
  rref_result res;
  int pivot_row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < ncols && pivot_row < rows; ++col) {
    int found = -1;
    for (int row = pivot_row; row < rows; ++row)
      if (!m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
        found = row;
        break;
      }
    if (found < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot_row)], m[static_cast<std::size_t>(found)]);
    auto& prow = m[static_cast<std::size_t>(pivot_row)];
    const rational inv = rational(1) / prow[static_cast<std::size_t>(col)];
    for (rational& e : prow) e *= inv;
    for (int row = 0; row < rows; ++row) {
      if (row == pivot_row) continue;
      auto& target = m[static_cast<std::size_t>(row)];
      const rational factor = target[static_cast<std::size_t>(col)];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * prow[j];
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  res.mat = std::move(m);
  return res;
}

// Solves A x = b with free variables set to zero.  Throws std::logic_error
// when the system is inconsistent.
inline std::vector<rational> solve_particular(const rational_matrix& a,
                                              const std::vector<rational>& b, int ncols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_particular: size mismatch");
  rational_matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const rref_result r = reduced_row_echelon(std::move(aug), ncols);
  for (std::size_t row = static_cast<std::size_t>(r.rank); row < r.mat.size(); ++row)
    if (!r.mat[row].back().is_zero())
      throw std::logic_error("solve_particular: inconsistent linear system");
  std::vector<rational> x(static_cast<std::size_t>(ncols), rational(0));
  for (int i = 0; i < r.rank; ++i)
    x[static_cast<std::size_t>(r.pivot_cols[static_cast<std::size_t>(i)])] =
        r.mat[static_cast<std::size_t>(i)].back();
  return x;
}

// Basis of the kernel of A, one vector per free column, free columns in
// ascending order.
inline std::vector<std::vector<rational>> kernel_basis(const rational_matrix& a, int ncols) {
  const rref_result r = reduced_row_echelon(a, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (const int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<rational>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<rational> v(static_cast<std::size_t>(ncols), rational(0));
    v[static_cast<std::size_t>(f)] = rational(1);
    for (int i = 0; i < r.rank; ++i)
      v[static_cast<std::size_t>(r.pivot_cols[static_cast<std::size_t>(i)])] =
          -r.mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qstab
