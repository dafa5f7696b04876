#pragma once

#include "exactcat/linalg/matrix.hpp"
#include "exactcat/linalg/rational.hpp"

#include <optional>
#include <stdexcept>

namespace exactcat::linalg {

namespace detail {

inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant.
inline mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& u) {
  if (u.rows() != u.cols()) return false;
  mpz_class d = determinant(u);
  return d == 1 || d == -1;
}

struct HnfResult {
  IntMatrix form;
  /// Unimodular, input * transform == form.
  IntMatrix transform;
  std::size_t rank = 0;
};

/// Column Hermite normal form. Pivot rows strictly increase from left to
/// right, pivots are positive, entries right of a pivot vanish and entries
/// left of a pivot lie in [0, pivot). Zero columns trail.
inline HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.cols());
  std::size_t c = 0;
  for (std::size_t i = 0; i < h.rows() && c < h.cols(); ++i) {
    for (;;) {
      std::size_t best = h.cols();
      for (std::size_t j = c; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        if (best == h.cols() || abs(h(i, j)) < abs(h(i, best))) best = j;
      }
      if (best == h.cols()) break;
      h.swap_cols(c, best);
      u.swap_cols(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        const mpz_class q = -detail::floor_div(h(i, j), h(i, c));
        h.add_col(j, c, q);
        u.add_col(j, c, q);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (c >= h.cols() || h(i, c) == 0) continue;
    if (h(i, c) < 0) {
      h.negate_col(c);
      u.negate_col(c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      const mpz_class q = -detail::floor_div(h(i, j), h(i, c));
      h.add_col(j, c, q);
      u.add_col(j, c, q);
    }
    ++c;
  }
  return {std::move(h), std::move(u), c};
}

struct SnfDecomposition {
  /// Diagonal, nonnegative, d_i | d_{i+1}, zeros trail.
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::size_t rank = 0;
};

/// Smith normal form by elementary reduction with the smallest nonzero
/// entry as pivot: left * A * right == diagonal.
inline SnfDecomposition snf(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (bi == m || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) goto finished;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const mpz_class q = -detail::floor_div(d(i, t), d(t, t));
        d.add_row(i, t, q);
        u.add_row(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const mpz_class q = -detail::floor_div(d(t, j), d(t, t));
        d.add_col(j, t, q);
        v.add_col(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      d.add_row(t, bad, 1);
      u.add_row(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
finished:
  return {std::move(d), std::move(u), std::move(v), t};
}

/// Solves A X = B over the integers via the Smith form.
inline std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_integer: A and B row counts differ");
  const auto s = snf(a);
  const IntMatrix c = s.left * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (i < s.rank) {
        const mpz_class& di = s.diagonal(i, i);
        if (!mpz_divisible_p(c(i, j).get_mpz_t(), di.get_mpz_t())) return std::nullopt;
        mpz_divexact(y(i, j).get_mpz_t(), c(i, j).get_mpz_t(), di.get_mpz_t());
      } else if (c(i, j) != 0) {
        return std::nullopt;
      }
    }
  return s.right * y;
}

/// Canonical basis of an integer column span: nonzero columns of the HNF.
inline IntMatrix canonical_lattice(const IntMatrix& basis) {
  const auto h = hnf(basis);
  return h.form.block(0, h.form.rows(), 0, h.rank);
}

/// Basis of the integer kernel {x in Z^n : A x = 0}, in canonical form.
inline IntMatrix integer_kernel_basis(const IntMatrix& a) {
  const auto h = hnf(a);
  return canonical_lattice(h.transform.block(0, a.cols(), h.rank, a.cols()));
}

/// Saturation of the lattice spanned by the columns of L inside
/// Z^ambient_rank: every v with k v in span(L) for some k != 0.
inline IntMatrix saturate(const IntMatrix& l, std::size_t ambient_rank) {
  if (l.rows() != ambient_rank)
    throw std::invalid_argument("saturate: basis has " + std::to_string(l.rows()) +
                                " rows, ambient rank is " + std::to_string(ambient_rank));
  if (rank(l) != l.cols()) throw std::invalid_argument("saturate: columns are rationally dependent");
  const auto s = snf(l);
  const auto inv = inverse(to_rational(s.left));
  const IntMatrix u_inv = to_integer(*inv);
  return canonical_lattice(u_inv.block(0, ambient_rank, 0, l.cols()));
}

}  // namespace exactcat::linalg
