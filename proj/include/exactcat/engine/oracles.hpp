#pragma once

#include "exactcat/core/constructions.hpp"
#include "exactcat/instances/finvectq.hpp"
#include "exactcat/instances/latticez.hpp"
#include "exactcat/instances/monopairsq.hpp"
#include "exactcat/linalg/normal_form.hpp"
#include "exactcat/linalg/rational.hpp"

#include <optional>
#include <string>

namespace exactcat::engine {

namespace detail {

inline linalg::RatMatrix as_rational(const linalg::RatMatrix& m) { return m; }
inline linalg::RatMatrix as_rational(const linalg::IntMatrix& m) { return linalg::to_rational(m); }

}  // namespace detail

/// Rank-nullity over the rationals: the kernel object has ambient
/// dimension dim X - rank f and the cokernel dim Y - rank f. Holds in all
/// three instances because saturation does not change rational rank.
template <AdditiveInstance C>
std::optional<std::string> dimension_oracle(const C& c, const Mor<C>& f, const KernelData<C>& kd,
                                            const CokernelData<C>& cd) {
  const std::size_t r = linalg::rank(detail::as_rational(f.matrix));
  if (c.ambient_dim(kd.obj) + r != c.ambient_dim(f.dom)) return "kernel dimension differs from dim X - rank f";
  if (c.ambient_dim(cd.obj) + r != c.ambient_dim(f.cod)) return "cokernel dimension differs from dim Y - rank f";
  return std::nullopt;
}

/// Instance-specific checks computed by a route independent of the
/// instance's kernel and cokernel code.
template <AdditiveInstance C>
std::optional<std::string> structure_oracle(const C&, const Mor<C>&, const KernelData<C>&, const CokernelData<C>&) {
  return std::nullopt;
}

/// The kernel inclusion has pure image, and the kernel of the cokernel
/// projection is the saturation of the image of f.
inline std::optional<std::string> structure_oracle(const LatticeZ&, const LatticeZ::Mor& f,
                                                   const KernelData<LatticeZ>& kd,
                                                   const CokernelData<LatticeZ>& cd) {
  const auto& inc = kd.inclusion.matrix;
  if (inc.cols() > 0 && linalg::saturate(inc, inc.rows()) != linalg::canonical_lattice(inc))
    return "kernel inclusion image is not saturated";
  const auto img = linalg::canonical_lattice(f.matrix);
  const auto ker_q = linalg::integer_kernel_basis(cd.projection.matrix);
  const linalg::IntMatrix sat = img.cols() == 0 ? img : linalg::saturate(img, f.cod.rank);
  if (ker_q != sat) return "kernel of the cokernel projection is not the saturated image";
  return std::nullopt;
}

/// dim(U cap ker phi) = dim U - rank(phi B) and
/// dim((U' + im phi) / im phi) = rank[phi | B'] - rank phi.
inline std::optional<std::string> structure_oracle(const MonoPairsQ&, const MonoPairsQ::Mor& f,
                                                   const KernelData<MonoPairsQ>& kd,
                                                   const CokernelData<MonoPairsQ>& cd) {
  const std::size_t k = f.dom.sub.cols();
  if (kd.obj.sub.cols() + linalg::rank(f.matrix * f.dom.sub) != k) return "kernel subspace has the wrong dimension";
  const std::size_t spanned = linalg::rank(linalg::hstack(f.matrix, f.cod.sub));
  if (cd.obj.sub.cols() + linalg::rank(f.matrix) != spanned) return "cokernel subspace has the wrong dimension";
  return std::nullopt;
}

}  // namespace exactcat::engine
