#pragma once

#include "exactcat/linalg/matrix.hpp"

#include <optional>
#include <vector>

namespace exactcat::linalg {

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  /// Invertible, transform * input == reduced.
  RatMatrix transform;
};

/// Gauss-Jordan elimination. Pivot choice is the first nonzero entry in
/// the column, so the result is the unique reduced row echelon form.
inline RrefResult rref(const RatMatrix& m) {
  RatMatrix r = m;
  RatMatrix t = RatMatrix::identity(m.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && sgn(r(p, col)) == 0) ++p;
    if (p == r.rows()) continue;
    r.swap_rows(row, p);
    t.swap_rows(row, p);
    const mpq_class inv = 1 / r(row, col);
    for (std::size_t j = 0; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t j = 0; j < t.cols(); ++j) t(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || sgn(r(i, col)) == 0) continue;
      const mpq_class factor = -r(i, col);
      r.add_row(i, row, factor);
      t.add_row(i, row, factor);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots), std::move(t)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

namespace detail {

inline void normalize_column_signs(RatMatrix& k) {
  for (std::size_t j = 0; j < k.cols(); ++j) {
    for (std::size_t i = 0; i < k.rows(); ++i) {
      if (sgn(k(i, j)) == 0) continue;
      if (sgn(k(i, j)) < 0) k.negate_col(j);
      break;
    }
  }
}

}  // namespace detail

/// Columns form a basis of {x : A x = 0}: one vector per free column of
/// the RREF, with the first nonzero entry of each vector made positive.
inline RatMatrix kernel_basis(const RatMatrix& a) {
  const auto [r, pivots, t] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  RatMatrix k(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -r(i, free[f]);
  }
  detail::normalize_column_signs(k);
  return k;
}

/// Pivot columns of A, so the basis consists of original columns.
inline RatMatrix image_basis(const RatMatrix& a) {
  const auto res = rref(a);
  return a.select_columns(res.pivots);
}

/// Rows span the left null space {y : y A = 0}.
inline RatMatrix left_kernel_basis(const RatMatrix& a) {
  return kernel_basis(a.transpose()).transpose();
}

struct SolveResult {
  RatMatrix particular;
  RatMatrix kernel;
};

/// Solves A X = B. Returns nullopt when some column of B is outside col(A).
inline std::optional<SolveResult> solve_right(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_right: A and B row counts differ");
  const auto [r, pivots, t] = rref(a);
  const RatMatrix tb = t * b;
  for (std::size_t i = pivots.size(); i < tb.rows(); ++i)
    for (std::size_t j = 0; j < tb.cols(); ++j)
      if (sgn(tb(i, j)) != 0) return std::nullopt;
  RatMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = tb(i, j);
  return SolveResult{std::move(x), kernel_basis(a)};
}

/// Solves X A = B.
inline std::optional<SolveResult> solve_left(const RatMatrix& a, const RatMatrix& b) {
  auto res = solve_right(a.transpose(), b.transpose());
  if (!res) return std::nullopt;
  return SolveResult{res->particular.transpose(), res->kernel.transpose()};
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto res = rref(a);
  if (res.pivots.size() != a.rows()) return std::nullopt;
  return std::move(res.transform);
}

/// Canonical basis of a column span: RREF of the transposed basis, nonzero
/// rows transposed back. Equal spans give equal matrices.
inline RatMatrix canonical_span(const RatMatrix& basis) {
  const auto res = rref(basis.transpose());
  return res.reduced.block(0, res.pivots.size(), 0, res.reduced.cols()).transpose();
}

/// Extends the independent columns of B with standard basis vectors to a
/// basis of the ambient space; returns the indices of the added vectors.
inline std::vector<std::size_t> complement_coordinates(const RatMatrix& basis) {
  const std::size_t n = basis.rows();
  const auto res = rref(hstack(basis, RatMatrix::identity(n)));
  std::vector<std::size_t> added;
  for (auto p : res.pivots)
    if (p >= basis.cols()) added.push_back(p - basis.cols());
  return added;
}

}  // namespace exactcat::linalg
