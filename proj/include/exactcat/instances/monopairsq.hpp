#pragma once

#include "exactcat/core/category.hpp"
#include "exactcat/instances/sampling.hpp"
#include "exactcat/instances/shrink.hpp"
#include "exactcat/linalg/json.hpp"
#include "exactcat/linalg/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace exactcat {

/// Pairs (U subset V) of rational vector spaces; a morphism is a linear map
/// of the ambient spaces sending U into U'. The distinguished subspace is
/// stored as a basis matrix in canonical form (RREF of the transpose), so
/// equal subspaces compare equal.
///
/// kernel of phi:   (U cap ker phi  subset  ker phi)
/// cokernel of phi: (image of U'    subset  V' / im phi)
///
/// The kernel of the cokernel of phi is therefore (U' cap im phi subset
/// im phi) while the image of phi only reaches phi(U); when phi(U) is
/// strictly smaller the morphism is not strict.
class MonoPairsQ {
 public:
  using Scalar = mpq_class;
  struct Object {
    std::size_t dim = 0;
    /// dim x k, independent columns, canonical.
    linalg::RatMatrix sub;
    friend bool operator==(const Object&, const Object&) = default;
  };
  using Mor = Morphism<Object, Scalar>;

  /// With the hypothesis disabled, kernels and cokernels that are neither
  /// isomorphisms nor split get no rule-based verdict and fall back to
  /// probing.
  explicit MonoPairsQ(bool hypothesis_rule = true) : hypothesis_rule_(hypothesis_rule) {}

  [[nodiscard]] bool hypothesis_rule() const { return hypothesis_rule_; }

  [[nodiscard]] std::string_view name() const { return "MonoPairsQ"; }
  [[nodiscard]] Object zero_object() const { return {0, linalg::RatMatrix(0, 0)}; }
  [[nodiscard]] std::size_t ambient_dim(const Object& x) const { return x.dim; }

  /// Canonical object from any spanning set of the subspace.
  [[nodiscard]] static Object object(std::size_t dim, const linalg::RatMatrix& spanning) {
    if (spanning.rows() != dim)
      throw InvalidMorphism("subspace basis must have " + std::to_string(dim) + " rows");
    return {dim, linalg::canonical_span(spanning)};
  }

  [[nodiscard]] Object direct_sum(const Object& x, const Object& y) const {
    return {x.dim + y.dim, linalg::block_diag(x.sub, y.sub)};
  }

  /// Validates the shape and phi(U) subset U'.
  [[nodiscard]] Mor make(const Object& dom, const Object& cod, const linalg::RatMatrix& m) const {
    if (m.rows() != cod.dim || m.cols() != dom.dim)
      throw InvalidMorphism("matrix must be " + std::to_string(cod.dim) + "x" + std::to_string(dom.dim));
    if (!preserves_subspace(dom, cod, m))
      throw InvalidMorphism("subspace constraint violated: the ambient map does not send sub into the codomain's sub");
    return Mor{dom, cod, m};
  }

  [[nodiscard]] static bool preserves_subspace(const Object& dom, const Object& cod, const linalg::RatMatrix& m) {
    return linalg::solve_right(cod.sub, m * dom.sub).has_value();
  }

  [[nodiscard]] std::pair<Object, Mor> kernel_of(const Mor& f) const {
    const linalg::RatMatrix n = linalg::kernel_basis(f.matrix);
    const linalg::RatMatrix meet = f.dom.sub * linalg::kernel_basis(f.matrix * f.dom.sub);
    const auto coords = linalg::solve_right(n, meet);
    Object obj = object(n.cols(), coords->particular);
    return {obj, Mor{obj, f.dom, n}};
  }

  [[nodiscard]] std::pair<Object, Mor> cokernel_of(const Mor& f) const {
    linalg::RatMatrix q = linalg::left_kernel_basis(f.matrix);
    Object obj = object(q.rows(), q * f.cod.sub);
    return {obj, Mor{f.cod, obj, std::move(q)}};
  }

  /// Basis of Hom(X, Y) as ambient matrices: phi with P' phi B == 0, where
  /// B spans U and the rows of P' cut out U'.
  [[nodiscard]] static std::vector<linalg::RatMatrix> hom_basis(const Object& x, const Object& y) {
    const std::size_t n = x.dim, m = y.dim;
    const linalg::RatMatrix ann = linalg::left_kernel_basis(y.sub);
    const linalg::RatMatrix& b = x.sub;
    linalg::RatMatrix constraints(ann.rows() * b.cols(), m * n);
    for (std::size_t a = 0; a < ann.rows(); ++a)
      for (std::size_t c = 0; c < b.cols(); ++c)
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < n; ++j) constraints(a * b.cols() + c, j * m + i) = ann(a, i) * b(j, c);
    const linalg::RatMatrix k = linalg::kernel_basis(constraints);
    std::vector<linalg::RatMatrix> basis;
    for (std::size_t col = 0; col < k.cols(); ++col) {
      linalg::RatMatrix phi(m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) phi(i, j) = k(j * m + i, col);
      basis.push_back(std::move(phi));
    }
    return basis;
  }

  [[nodiscard]] std::optional<Mor> lift(const Mor& f, const Mor& h) const {
    if (!(h.cod == f.cod)) throw DomainMismatch("lift: codomains differ");
    auto s = linalg::solve_right(f.matrix, h.matrix);
    if (!s) return std::nullopt;
    if (s->kernel.cols() == 0) {
      if (!preserves_subspace(h.dom, f.dom, s->particular)) return std::nullopt;
      return Mor{h.dom, f.dom, std::move(s->particular)};
    }
    return solve_in_hom(h.dom, f.dom, h.matrix, [&](const linalg::RatMatrix& u) { return f.matrix * u; });
  }

  [[nodiscard]] std::optional<Mor> descend(const Mor& f, const Mor& h) const {
    if (!(h.dom == f.dom)) throw DomainMismatch("descend: domains differ");
    auto s = linalg::solve_left(f.matrix, h.matrix);
    if (!s) return std::nullopt;
    if (s->kernel.rows() == 0) {
      if (!preserves_subspace(f.cod, h.cod, s->particular)) return std::nullopt;
      return Mor{f.cod, h.cod, std::move(s->particular)};
    }
    return solve_in_hom(f.cod, h.cod, h.matrix, [&](const linalg::RatMatrix& u) { return u * f.matrix; });
  }

  /// Bijective ambient map with phi(U) == U'.
  [[nodiscard]] bool is_iso(const Mor& f) const {
    return f.dom.dim == f.cod.dim && f.dom.sub.cols() == f.cod.sub.cols() && linalg::rank(f.matrix) == f.dom.dim;
  }

  [[nodiscard]] Mor inverse(const Mor& f) const {
    if (!is_iso(f)) throw Error("inverse: morphism is not an isomorphism");
    return Mor{f.cod, f.dom, *linalg::inverse(f.matrix)};
  }

  [[nodiscard]] std::optional<Mor> section(const Mor& g) const {
    return lift(g, Mor{g.cod, g.cod, linalg::RatMatrix::identity(g.cod.dim)});
  }
  [[nodiscard]] std::optional<Mor> retraction(const Mor& f) const {
    return descend(f, Mor{f.dom, f.dom, linalg::RatMatrix::identity(f.dom.dim)});
  }

  // The category is expected to be quasi-abelian (a torsion-free class in
  // the abelian category of representations of the A2 quiver), in which case
  // every kernel and cokernel is semi-stable. Not proved here; the switch
  // exists so probes can cross-check it.
  [[nodiscard]] std::optional<std::string> semistable_cokernel_rule(const Mor&) const {
    if (hypothesis_rule_) return "instance-rule";
    return std::nullopt;
  }
  [[nodiscard]] std::optional<std::string> semistable_kernel_rule(const Mor&) const {
    if (hypothesis_rule_) return "instance-rule";
    return std::nullopt;
  }

  [[nodiscard]] Object sample_object(Rng& rng, const SamplerConfig& cfg) const {
    const std::size_t n = rng.below(cfg.max_dim + 1);
    const std::size_t k = rng.below(n + 1);
    if (!rng.percent(cfg.structured_percent)) {
      for (int attempt = 0; attempt < 8; ++attempt) {
        auto b = sampling::random_matrix<Scalar>(n, k, rng, std::max<std::int64_t>(1, cfg.max_entry));
        if (linalg::rank(b) == k) return object(n, b);
      }
    }
    linalg::RatMatrix b(n, k);
    const std::size_t off = rng.below(n - k + 1);
    for (std::size_t i = 0; i < k; ++i) b(off + i, i) = 1;
    return object(n, b);
  }

  /// Free coefficients of the hom-space basis drawn from the entry range.
  [[nodiscard]] Mor sample_morphism(const Object& dom, const Object& cod, Rng& rng, const SamplerConfig& cfg) const {
    if (rng.percent(cfg.structured_percent)) {
      auto m = sampling::structured_matrix<Scalar>(cod.dim, dom.dim, rng, cfg.max_entry);
      if (preserves_subspace(dom, cod, m)) return Mor{dom, cod, std::move(m)};
    }
    const auto basis = hom_basis(dom, cod);
    linalg::RatMatrix m(cod.dim, dom.dim);
    for (const auto& e : basis) {
      const mpq_class c(static_cast<long>(rng.uniform(-cfg.max_entry, cfg.max_entry)));
      if (sgn(c) != 0) m = m + c * e;
    }
    return Mor{dom, cod, std::move(m)};
  }

  /// W M W^-1 with W = [basis of U | complement] and M block upper
  /// triangular with invertible diagonal blocks.
  [[nodiscard]] Mor sample_automorphism(const Object& x, Rng& rng, const SamplerConfig& cfg) const {
    const std::size_t n = x.dim, k = x.sub.cols();
    const auto extra = linalg::complement_coordinates(x.sub);
    linalg::RatMatrix w = x.sub;
    w = linalg::hstack(w, linalg::RatMatrix::identity(n).select_columns(extra));
    linalg::RatMatrix m(n, n);
    const auto a = sampling::random_unimodular<Scalar>(k, rng, cfg.max_entry);
    const auto d = sampling::random_unimodular<Scalar>(n - k, rng, cfg.max_entry);
    const auto top = sampling::random_matrix<Scalar>(k, n - k, rng, cfg.max_entry);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < n - k; ++j) m(i, k + j) = top(i, j);
    }
    for (std::size_t i = 0; i < n - k; ++i)
      for (std::size_t j = 0; j < n - k; ++j) m(k + i, k + j) = d(i, j);
    return Mor{x, x, w * m * *linalg::inverse(w)};
  }

  /// Restrict to a coordinate hyperplane of the domain, project away a
  /// codomain coordinate, shrink the domain's subspace, grow the codomain's
  /// subspace, or shrink an entry (kept only if still a morphism).
  [[nodiscard]] std::vector<Mor> shrink_candidates(const Mor& f, ShrinkMode mode) const {
    std::vector<Mor> out;
    const std::size_t n = f.dom.dim, m = f.cod.dim;
    auto others = [](std::size_t size, std::size_t skip) {
      std::vector<std::size_t> keep;
      for (std::size_t k = 0; k < size; ++k)
        if (k != skip) keep.push_back(k);
      return keep;
    };
    // The domain restricted to the hyperplane x_j = 0.
    auto restricted = [&](std::size_t j) {
      linalg::RatMatrix row(1, n);
      row(0, j) = 1;
      const linalg::RatMatrix meet = f.dom.sub * linalg::kernel_basis(row * f.dom.sub);
      return object(n - 1, meet.select_rows(others(n, j)));
    };
    if (!mode.fix_dom && !mode.fix_cod)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
          out.push_back(Mor{restricted(j), object(m - 1, f.cod.sub.select_rows(others(m, i))),
                            f.matrix.select_rows(others(m, i)).select_columns(others(n, j))});
    if (!mode.fix_dom) {
      for (std::size_t j = 0; j < n; ++j) out.push_back(Mor{restricted(j), f.cod, f.matrix.select_columns(others(n, j))});
      for (std::size_t c = 0; c < f.dom.sub.cols(); ++c) {
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < f.dom.sub.cols(); ++k)
          if (k != c) keep.push_back(k);
        out.push_back(Mor{object(n, f.dom.sub.select_columns(keep)), f.cod, f.matrix});
      }
    }
    if (!mode.fix_cod) {
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> keep;
        for (std::size_t r = 0; r < m; ++r)
          if (r != i) keep.push_back(r);
        Object cod = object(m - 1, f.cod.sub.select_rows(keep));
        out.push_back(Mor{f.dom, cod, f.matrix.select_rows(keep)});
      }
      for (auto e : linalg::complement_coordinates(f.cod.sub)) {
        linalg::RatMatrix grown = linalg::hstack(f.cod.sub, linalg::RatMatrix::identity(m).select_columns(std::vector{e}));
        out.push_back(Mor{f.dom, object(m, grown), f.matrix});
      }
    }
    for (auto& [d, c, mat] : shrink::free_candidates(n, m, f.matrix, ShrinkMode{true, true})) {
      (void)d;
      (void)c;
      if (preserves_subspace(f.dom, f.cod, mat)) out.push_back(Mor{f.dom, f.cod, std::move(mat)});
    }
    return out;
  }

  [[nodiscard]] linalg::json object_to_json(const Object& x) const {
    return {{"dim", x.dim}, {"sub", linalg::rows_to_json(x.sub)}};
  }

  [[nodiscard]] Object object_from_json(const linalg::json& j) const {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
      throw linalg::MatrixFormatError("MonoPairsQ object needs a nonnegative \"dim\"");
    const std::size_t n = j["dim"].get<std::size_t>();
    if (!j.contains("sub")) throw linalg::MatrixFormatError("MonoPairsQ object needs \"sub\"");
    const auto& s = j["sub"];
    if (!s.is_array()) throw linalg::MatrixFormatError("\"sub\" must be an array of rows");
    const std::size_t k = (n == 0 || s.empty() || !s[0].is_array()) ? 0 : s[0].size();
    const auto b = linalg::rows_from_json<Scalar>(s, n, k);
    if (linalg::rank(b) != k) throw InvalidMorphism("\"sub\" columns must be independent");
    return object(n, b);
  }

 private:
  template <class Apply>
  std::optional<Mor> solve_in_hom(const Object& dom, const Object& cod, const linalg::RatMatrix& target,
                                  Apply&& apply) const {
    const auto basis = hom_basis(dom, cod);
    linalg::RatMatrix system(target.rows() * target.cols(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const linalg::RatMatrix img = apply(basis[k]);
      for (std::size_t i = 0; i < img.rows(); ++i)
        for (std::size_t j = 0; j < img.cols(); ++j) system(i * img.cols() + j, k) = img(i, j);
    }
    linalg::RatMatrix rhs(target.rows() * target.cols(), 1);
    for (std::size_t i = 0; i < target.rows(); ++i)
      for (std::size_t j = 0; j < target.cols(); ++j) rhs(i * target.cols() + j, 0) = target(i, j);
    const auto s = linalg::solve_right(system, rhs);
    if (!s) return std::nullopt;
    linalg::RatMatrix u(cod.dim, dom.dim);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (sgn(s->particular(k, 0)) != 0) u = u + s->particular(k, 0) * basis[k];
    return Mor{dom, cod, std::move(u)};
  }

  bool hypothesis_rule_ = true;
};

}  // namespace exactcat
