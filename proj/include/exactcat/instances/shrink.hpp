#pragma once

#include "exactcat/instances/sampling.hpp"
#include "exactcat/linalg/matrix.hpp"

#include <tuple>
#include <vector>

namespace exactcat {

/// Which endpoints of a morphism must survive witness minimization.
struct ShrinkMode {
  bool fix_dom = false;
  bool fix_cod = false;
};

namespace shrink {

template <class T>
std::vector<T> smaller_entries(const T& v) {
  std::vector<T> out;
  if constexpr (std::is_same_v<T, mpq_class>) {
    if (v.get_den() != 1) {
      out.emplace_back(0);
      out.emplace_back(1);
      out.emplace_back(-1);
      return out;
    }
  }
  const mpz_class z(v);
  if (!z.fits_slong_p()) {
    out.emplace_back(0);
    return out;
  }
  for (long s : sampling::smaller_values(z.get_si())) out.emplace_back(s);
  return out;
}

/// Candidates for a matrix morphism between free objects: drop a domain
/// and a codomain coordinate together, drop either alone, then shrink
/// single entries.
template <class T>
std::vector<std::tuple<std::size_t, std::size_t, linalg::Matrix<T>>> free_candidates(std::size_t dom, std::size_t cod,
                                                                                    const linalg::Matrix<T>& m,
                                                                                    ShrinkMode mode) {
  std::vector<std::tuple<std::size_t, std::size_t, linalg::Matrix<T>>> out;
  auto others = [](std::size_t n, std::size_t skip) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k)
      if (k != skip) keep.push_back(k);
    return keep;
  };
  if (!mode.fix_dom && !mode.fix_cod)
    for (std::size_t i = 0; i < cod; ++i)
      for (std::size_t j = 0; j < dom; ++j)
        out.emplace_back(dom - 1, cod - 1, m.select_rows(others(cod, i)).select_columns(others(dom, j)));
  if (!mode.fix_dom)
    for (std::size_t j = 0; j < dom; ++j) {
      std::vector<std::size_t> keep;
      for (std::size_t k = 0; k < dom; ++k)
        if (k != j) keep.push_back(k);
      out.emplace_back(dom - 1, cod, m.select_columns(keep));
    }
  if (!mode.fix_cod)
    for (std::size_t i = 0; i < cod; ++i) {
      std::vector<std::size_t> keep;
      for (std::size_t k = 0; k < cod; ++k)
        if (k != i) keep.push_back(k);
      out.emplace_back(dom, cod - 1, m.select_rows(keep));
    }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) == 0) continue;
      for (const T& v : smaller_entries(m(i, j))) {
        linalg::Matrix<T> c = m;
        c(i, j) = v;
        out.emplace_back(dom, cod, std::move(c));
      }
    }
  return out;
}

}  // namespace shrink

}  // namespace exactcat
