#pragma once

#include "exactcat/instances/finvectq.hpp"

namespace exactcat::testing {

/// Rational vector spaces with a deliberately wrong notion of cokernel:
/// surjections out of spaces of dimension 4 or more are reported as not
/// being cokernels. Pullbacks of honest cokernels land there, so
/// semi-stability fails. It has no rules, and splittings are hidden so
/// every semi-stability question reaches the probe.
class MockBroken : public FinVectQ {
 public:
  static constexpr std::size_t threshold = 4;

  [[nodiscard]] std::string_view name() const { return "MockBroken"; }

  [[nodiscard]] std::optional<bool> override_is_cokernel(const Mor& f) const {
    if (f.dom.dim >= threshold && linalg::rank(f.matrix) == f.cod.dim) return false;
    return std::nullopt;
  }

  [[nodiscard]] std::optional<Mor> section(const Mor& g) const {
    if (!is_iso(g)) return std::nullopt;
    return inverse(g);
  }
  [[nodiscard]] std::optional<Mor> retraction(const Mor& f) const {
    if (!is_iso(f)) return std::nullopt;
    return inverse(f);
  }

  [[nodiscard]] std::optional<std::string> semistable_cokernel_rule(const Mor&) const { return std::nullopt; }
  [[nodiscard]] std::optional<std::string> semistable_kernel_rule(const Mor&) const { return std::nullopt; }
};

}  // namespace exactcat::testing
