#pragma once

#include "exactcat/core/constructions.hpp"
#include "exactcat/instances/sampling.hpp"

namespace exactcat {

/// Instance that can also draw random objects and morphisms.
template <class C>
concept SampledInstance = AdditiveInstance<C> && requires(const C& c, const Obj<C>& x, const Mor<C>& f, Rng& rng,
                                                          const SamplerConfig& cfg, ShrinkMode mode) {
  { c.sample_object(rng, cfg) } -> std::same_as<Obj<C>>;
  { c.sample_morphism(x, x, rng, cfg) } -> std::same_as<Mor<C>>;
  { c.sample_automorphism(x, rng, cfg) } -> std::same_as<Mor<C>>;
  { c.shrink_candidates(f, mode) } -> std::same_as<std::vector<Mor<C>>>;
};

/// A composable pair (f, g) with g o f == 0.
template <AdditiveInstance C>
struct ExactPair {
  Mor<C> f;
  Mor<C> g;
};

template <SampledInstance C>
Obj<C> sample_object(const C& c, const SamplerConfig& cfg, std::size_t index) {
  Rng rng(cfg.seed, index);
  return c.sample_object(rng, cfg);
}

template <SampledInstance C>
Mor<C> sample_morphism(const C& c, const Obj<C>& dom, const Obj<C>& cod, const SamplerConfig& cfg, std::size_t index) {
  Rng rng(cfg.seed, index);
  return c.sample_morphism(dom, cod, rng, cfg);
}

/// f = ker g for a random g out of y, then g replaced by cok f.
template <SampledInstance C>
ExactPair<C> exact_pair_through(const C& c, const Obj<C>& y, Rng& rng, const SamplerConfig& cfg) {
  const Obj<C> w = c.sample_object(rng, cfg);
  const Mor<C> g = c.sample_morphism(y, w, rng, cfg);
  auto kd = kernel(c, g);
  auto cd = cokernel(c, kd.inclusion);
  return {std::move(kd.inclusion), std::move(cd.projection)};
}

template <SampledInstance C>
ExactPair<C> sample_exact_pair(const C& c, Rng& rng, const SamplerConfig& cfg) {
  const Obj<C> y = c.sample_object(rng, cfg);
  return exact_pair_through(c, y, rng, cfg);
}

template <SampledInstance C>
ExactPair<C> sample_exact_pair(const C& c, const SamplerConfig& cfg, std::size_t index) {
  Rng rng(cfg.seed, index);
  return sample_exact_pair(c, rng, cfg);
}

/// (ker g, cok ker g) for a given g.
template <AdditiveInstance C>
ExactPair<C> exact_pair_from(const C& c, const Mor<C>& g) {
  auto kd = kernel(c, g);
  auto cd = cokernel(c, kd.inclusion);
  return {std::move(kd.inclusion), std::move(cd.projection)};
}

/// A cokernel with the given domain: cok of a random map into it.
template <SampledInstance C>
Mor<C> sample_cokernel_from(const C& c, const Obj<C>& x, Rng& rng, const SamplerConfig& cfg) {
  const Obj<C> u = c.sample_object(rng, cfg);
  return cokernel(c, c.sample_morphism(u, x, rng, cfg)).projection;
}

/// A kernel with the given codomain: ker of a random map out of it.
template <SampledInstance C>
Mor<C> sample_kernel_into(const C& c, const Obj<C>& y, Rng& rng, const SamplerConfig& cfg) {
  const Obj<C> w = c.sample_object(rng, cfg);
  return kernel(c, c.sample_morphism(y, w, rng, cfg)).inclusion;
}

}  // namespace exactcat
