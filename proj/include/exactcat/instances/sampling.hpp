#pragma once

#include "exactcat/linalg/matrix.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace exactcat {

struct SamplerConfig {
  std::size_t max_dim = 3;
  std::int64_t max_entry = 3;
  std::uint64_t seed = 42;
  /// Share of draws replaced by structured morphisms (identities,
  /// projections, injections, diagonal maps).
  unsigned structured_percent = 20;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic stream keyed by (seed, stream). Bounded draws use
/// rejection sampling on the raw engine output so results do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(seed ^ splitmix64(stream + 0x51ed270b27a3ULL))) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

  bool percent(unsigned p) { return uniform(0, 99) < static_cast<std::int64_t>(p); }

  /// Independent child stream, for handing to nested samplers.
  Rng fork(std::uint64_t salt) { return Rng(next(), salt); }

 private:
  std::mt19937_64 engine_;
};

namespace sampling {

template <class T>
linalg::Matrix<T> random_matrix(std::size_t rows, std::size_t cols, Rng& rng, std::int64_t max_entry) {
  linalg::Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng.uniform(-max_entry, max_entry));
  return m;
}

/// Identity block, coordinate projection/injection, diagonal or zero map.
template <class T>
linalg::Matrix<T> structured_matrix(std::size_t rows, std::size_t cols, Rng& rng, std::int64_t max_entry) {
  linalg::Matrix<T> m(rows, cols);
  const std::size_t k = std::min(rows, cols);
  switch (rng.below(4)) {
    case 0:
      for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
      break;
    case 1:
      for (std::size_t i = 0; i < k; ++i) m(i, i) = static_cast<long>(rng.uniform(-max_entry, max_entry));
      break;
    case 2: {
      // shifted coordinate embedding/projection
      const std::size_t off = rows > cols ? rng.below(rows - cols + 1) : 0;
      const std::size_t coff = cols > rows ? rng.below(cols - rows + 1) : 0;
      for (std::size_t i = 0; i < k; ++i) m(off + i, coff + i) = 1;
      break;
    }
    default:
      break;
  }
  return m;
}

/// Unit lower times unit upper triangular, rows permuted: determinant +-1.
template <class T>
linalg::Matrix<T> random_unimodular(std::size_t n, Rng& rng, std::int64_t max_entry) {
  linalg::Matrix<T> lower = linalg::Matrix<T>::identity(n);
  linalg::Matrix<T> upper = linalg::Matrix<T>::identity(n);
  const std::int64_t e = std::max<std::int64_t>(1, max_entry);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = static_cast<long>(rng.uniform(-e, e));
      upper(j, i) = static_cast<long>(rng.uniform(-e, e));
    }
  linalg::Matrix<T> m = lower * upper;
  for (std::size_t i = n; i > 1; --i) m.swap_rows(i - 1, rng.below(i));
  if (n > 0 && rng.percent(50)) m.negate_row(0);
  return m;
}

/// Values of strictly smaller magnitude, smallest first, positive before
/// negative.
inline std::vector<long> smaller_values(long v) {
  std::vector<long> out;
  const long a = v < 0 ? -v : v;
  for (long k = 0; k < a; ++k) {
    out.push_back(k);
    if (k != 0) out.push_back(-k);
  }
  if (v < 0) out.push_back(a);
  return out;
}

}  // namespace sampling

}  // namespace exactcat
