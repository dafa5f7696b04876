#pragma once

#include "exactcat/core/category.hpp"
#include "exactcat/instances/sampling.hpp"
#include "exactcat/instances/shrink.hpp"
#include "exactcat/linalg/json.hpp"
#include "exactcat/linalg/normal_form.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace exactcat {

/// Free abelian groups of finite rank with integer matrices as morphisms.
///
/// Kernels are integer kernels, which are automatically pure. The cokernel
/// of f: Z^m -> Z^n is Z^n modulo the saturation of f's image, so the
/// torsion of the naive quotient is discarded and every object stays free.
/// Consequently (2): Z -> Z is mono and epi without being invertible.
///
/// Semi-stability rules: a cokernel is a surjection onto a free group and
/// therefore splits, a kernel is an embedding with pure image and
/// therefore has a complement. Split epimorphisms and split monomorphisms
/// are semi-stable in any additive category, which is what the rules record.
class LatticeZ {
 public:
  using Scalar = mpz_class;
  struct Object {
    std::size_t rank = 0;
    friend bool operator==(const Object&, const Object&) = default;
  };
  using Mor = Morphism<Object, Scalar>;

  [[nodiscard]] std::string_view name() const { return "LatticeZ"; }
  [[nodiscard]] Object zero_object() const { return {}; }
  [[nodiscard]] std::size_t ambient_dim(const Object& x) const { return x.rank; }
  [[nodiscard]] Object direct_sum(const Object& x, const Object& y) const { return {x.rank + y.rank}; }

  [[nodiscard]] Mor make(const Object& dom, const Object& cod, const linalg::IntMatrix& m) const {
    if (m.rows() != cod.rank || m.cols() != dom.rank)
      throw InvalidMorphism("matrix must be " + std::to_string(cod.rank) + "x" + std::to_string(dom.rank));
    return Mor{dom, cod, m};
  }

  [[nodiscard]] std::pair<Object, Mor> kernel_of(const Mor& f) const {
    linalg::IntMatrix k = linalg::integer_kernel_basis(f.matrix);
    Object obj{k.cols()};
    return {obj, Mor{obj, f.dom, std::move(k)}};
  }

  /// Rows span the integer left kernel {y : y f = 0}. That lattice is pure,
  /// so the rows extend to a unimodular matrix and the projection is onto;
  /// its kernel is exactly the saturation of the image of f.
  [[nodiscard]] std::pair<Object, Mor> cokernel_of(const Mor& f) const {
    linalg::IntMatrix q = linalg::integer_kernel_basis(f.matrix.transpose()).transpose();
    Object obj{q.rows()};
    return {obj, Mor{f.cod, obj, std::move(q)}};
  }

  [[nodiscard]] std::optional<Mor> lift(const Mor& f, const Mor& h) const {
    if (!(h.cod == f.cod)) throw DomainMismatch("lift: codomains differ");
    auto u = linalg::solve_integer(f.matrix, h.matrix);
    if (!u) return std::nullopt;
    return Mor{h.dom, f.dom, std::move(*u)};
  }

  [[nodiscard]] std::optional<Mor> descend(const Mor& f, const Mor& h) const {
    if (!(h.dom == f.dom)) throw DomainMismatch("descend: domains differ");
    auto u = linalg::solve_integer(f.matrix.transpose(), h.matrix.transpose());
    if (!u) return std::nullopt;
    return Mor{f.cod, h.cod, u->transpose()};
  }

  [[nodiscard]] bool is_iso(const Mor& f) const {
    return f.dom.rank == f.cod.rank && linalg::is_unimodular(f.matrix);
  }

  [[nodiscard]] Mor inverse(const Mor& f) const {
    if (!is_iso(f)) throw Error("inverse: morphism is not an isomorphism");
    return Mor{f.cod, f.dom, linalg::to_integer(*linalg::inverse(linalg::to_rational(f.matrix)))};
  }

  [[nodiscard]] std::optional<Mor> section(const Mor& g) const {
    return lift(g, Mor{g.cod, g.cod, linalg::IntMatrix::identity(g.cod.rank)});
  }
  [[nodiscard]] std::optional<Mor> retraction(const Mor& f) const {
    return descend(f, Mor{f.dom, f.dom, linalg::IntMatrix::identity(f.dom.rank)});
  }

  [[nodiscard]] std::optional<std::string> semistable_cokernel_rule(const Mor&) const { return "instance-rule"; }
  [[nodiscard]] std::optional<std::string> semistable_kernel_rule(const Mor&) const { return "instance-rule"; }

  [[nodiscard]] Object sample_object(Rng& rng, const SamplerConfig& cfg) const {
    return {rng.below(cfg.max_dim + 1)};
  }

  [[nodiscard]] Mor sample_morphism(const Object& dom, const Object& cod, Rng& rng, const SamplerConfig& cfg) const {
    if (rng.percent(cfg.structured_percent))
      return Mor{dom, cod, sampling::structured_matrix<Scalar>(cod.rank, dom.rank, rng, cfg.max_entry)};
    return Mor{dom, cod, sampling::random_matrix<Scalar>(cod.rank, dom.rank, rng, cfg.max_entry)};
  }

  [[nodiscard]] Mor sample_automorphism(const Object& x, Rng& rng, const SamplerConfig& cfg) const {
    return Mor{x, x, sampling::random_unimodular<Scalar>(x.rank, rng, cfg.max_entry)};
  }

  [[nodiscard]] std::vector<Mor> shrink_candidates(const Mor& f, ShrinkMode mode) const {
    std::vector<Mor> out;
    for (auto& [d, c, m] : shrink::free_candidates(f.dom.rank, f.cod.rank, f.matrix, mode))
      out.push_back(Mor{Object{d}, Object{c}, std::move(m)});
    return out;
  }

  [[nodiscard]] linalg::json object_to_json(const Object& x) const { return {{"rank", x.rank}}; }

  [[nodiscard]] Object object_from_json(const linalg::json& j) const {
    if (!j.is_object() || !j.contains("rank") || !j["rank"].is_number_unsigned())
      throw linalg::MatrixFormatError("LatticeZ object needs a nonnegative \"rank\"");
    return {j["rank"].get<std::size_t>()};
  }
};

}  // namespace exactcat
