#pragma once

#include "exactcat/exactcat.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

namespace exactcat::testing {

using linalg::IntMatrix;
using linalg::RatMatrix;

inline RatMatrix Q(std::initializer_list<std::initializer_list<mpq_class>> rows) { return RatMatrix::from_rows(rows); }
inline IntMatrix Z(std::initializer_list<std::initializer_list<mpz_class>> rows) { return IntMatrix::from_rows(rows); }

inline RatMatrix zeros(std::size_t r, std::size_t c) { return RatMatrix(r, c); }

/// Determinant by cofactor expansion; slow but shares nothing with the
/// library's elimination code.
inline mpz_class cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    const mpz_class term = a(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Determinantal divisors: d_k = gcd of all k x k minors. The Smith
/// diagonal is s_k = d_k / d_{k-1}.
inline std::vector<mpz_class> smith_diagonal_by_minors(const IntMatrix& a) {
  std::vector<mpz_class> d{1};
  std::vector<mpz_class> s;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        const mpz_class m = cofactor_det(a.select_rows(r).select_columns(c));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
      }
    if (g == 0) {
      s.resize(std::min(a.rows(), a.cols()), 0);
      return s;
    }
    s.push_back(g / d.back());
    d.push_back(g);
  }
  return s;
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t max_dim, long bound) {
  const std::size_t r = 1 + rng.below(max_dim);
  const std::size_t c = 1 + rng.below(max_dim);
  return sampling::random_matrix<mpz_class>(r, c, rng, bound);
}

}  // namespace exactcat::testing
