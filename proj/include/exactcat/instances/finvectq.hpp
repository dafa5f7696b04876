#pragma once

#include "exactcat/core/category.hpp"
#include "exactcat/instances/sampling.hpp"
#include "exactcat/instances/shrink.hpp"
#include "exactcat/linalg/json.hpp"
#include "exactcat/linalg/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace exactcat {

/// Finite-dimensional rational vector spaces. Abelian, so it serves as the
/// control instance: every kernel-cokernel pair is exact and every morphism
/// is strict.
class FinVectQ {
 public:
  using Scalar = mpq_class;
  struct Object {
    std::size_t dim = 0;
    friend bool operator==(const Object&, const Object&) = default;
  };
  using Mor = Morphism<Object, Scalar>;

  [[nodiscard]] std::string_view name() const { return "FinVectQ"; }
  [[nodiscard]] Object zero_object() const { return {}; }
  [[nodiscard]] std::size_t ambient_dim(const Object& x) const { return x.dim; }
  [[nodiscard]] Object direct_sum(const Object& x, const Object& y) const { return {x.dim + y.dim}; }

  [[nodiscard]] Mor make(const Object& dom, const Object& cod, const linalg::RatMatrix& m) const {
    if (m.rows() != cod.dim || m.cols() != dom.dim)
      throw InvalidMorphism("matrix must be " + std::to_string(cod.dim) + "x" + std::to_string(dom.dim));
    return Mor{dom, cod, m};
  }

  [[nodiscard]] std::pair<Object, Mor> kernel_of(const Mor& f) const {
    linalg::RatMatrix k = linalg::kernel_basis(f.matrix);
    Object obj{k.cols()};
    return {obj, Mor{obj, f.dom, std::move(k)}};
  }

  /// Projection onto the quotient, rows spanning the left null space.
  [[nodiscard]] std::pair<Object, Mor> cokernel_of(const Mor& f) const {
    linalg::RatMatrix q = linalg::left_kernel_basis(f.matrix);
    Object obj{q.rows()};
    return {obj, Mor{f.cod, obj, std::move(q)}};
  }

  [[nodiscard]] std::optional<Mor> lift(const Mor& f, const Mor& h) const {
    if (!(h.cod == f.cod)) throw DomainMismatch("lift: codomains differ");
    auto s = linalg::solve_right(f.matrix, h.matrix);
    if (!s) return std::nullopt;
    return Mor{h.dom, f.dom, std::move(s->particular)};
  }

  [[nodiscard]] std::optional<Mor> descend(const Mor& f, const Mor& h) const {
    if (!(h.dom == f.dom)) throw DomainMismatch("descend: domains differ");
    auto s = linalg::solve_left(f.matrix, h.matrix);
    if (!s) return std::nullopt;
    return Mor{f.cod, h.cod, std::move(s->particular)};
  }

  [[nodiscard]] bool is_iso(const Mor& f) const {
    return f.dom.dim == f.cod.dim && linalg::rank(f.matrix) == f.dom.dim;
  }

  [[nodiscard]] Mor inverse(const Mor& f) const {
    auto inv = linalg::inverse(f.matrix);
    if (!inv) throw Error("inverse: morphism is not an isomorphism");
    return Mor{f.cod, f.dom, std::move(*inv)};
  }

  [[nodiscard]] std::optional<Mor> section(const Mor& g) const {
    return lift(g, Mor{g.cod, g.cod, linalg::RatMatrix::identity(g.cod.dim)});
  }
  [[nodiscard]] std::optional<Mor> retraction(const Mor& f) const {
    return descend(f, Mor{f.dom, f.dom, linalg::RatMatrix::identity(f.dom.dim)});
  }

  [[nodiscard]] std::optional<std::string> semistable_cokernel_rule(const Mor&) const { return "abelian"; }
  [[nodiscard]] std::optional<std::string> semistable_kernel_rule(const Mor&) const { return "abelian"; }

  [[nodiscard]] Object sample_object(Rng& rng, const SamplerConfig& cfg) const {
    return {rng.below(cfg.max_dim + 1)};
  }

  [[nodiscard]] Mor sample_morphism(const Object& dom, const Object& cod, Rng& rng, const SamplerConfig& cfg) const {
    if (rng.percent(cfg.structured_percent))
      return Mor{dom, cod, sampling::structured_matrix<Scalar>(cod.dim, dom.dim, rng, cfg.max_entry)};
    return Mor{dom, cod, sampling::random_matrix<Scalar>(cod.dim, dom.dim, rng, cfg.max_entry)};
  }

  [[nodiscard]] Mor sample_automorphism(const Object& x, Rng& rng, const SamplerConfig& cfg) const {
    return Mor{x, x, sampling::random_unimodular<Scalar>(x.dim, rng, cfg.max_entry)};
  }

  [[nodiscard]] std::vector<Mor> shrink_candidates(const Mor& f, ShrinkMode mode) const {
    std::vector<Mor> out;
    for (auto& [d, c, m] : shrink::free_candidates(f.dom.dim, f.cod.dim, f.matrix, mode))
      out.push_back(Mor{Object{d}, Object{c}, std::move(m)});
    return out;
  }

  [[nodiscard]] linalg::json object_to_json(const Object& x) const { return {{"dim", x.dim}}; }

  [[nodiscard]] Object object_from_json(const linalg::json& j) const {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
      throw linalg::MatrixFormatError("FinVectQ object needs a nonnegative \"dim\"");
    return {j["dim"].get<std::size_t>()};
  }
};

}  // namespace exactcat
