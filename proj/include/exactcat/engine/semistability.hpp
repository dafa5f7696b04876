#pragma once

#include "exactcat/core/constructions.hpp"
#include "exactcat/core/serialize.hpp"
#include "exactcat/engine/verdict.hpp"
#include "exactcat/instances/samplers.hpp"

#include <functional>

namespace exactcat::engine {

template <class C>
concept RuledInstance = SampledInstance<C> && requires(const C& c, const Mor<C>& f) {
  { c.semistable_cokernel_rule(f) } -> std::same_as<std::optional<std::string>>;
  { c.semistable_kernel_rule(f) } -> std::same_as<std::optional<std::string>>;
  { c.object_to_json(f.dom) } -> std::same_as<json>;
  { c.object_from_json(json{}) } -> std::same_as<Obj<C>>;
};

/// Greedy witness minimization: take the first candidate that still fails,
/// restart, stop when none does. Candidates list dimension reductions
/// before entry reductions.
template <RuledInstance C>
Mor<C> minimize(const C& c, Mor<C> m, ShrinkMode mode, const std::function<bool(const Mor<C>&)>& still_fails) {
  for (int round = 0; round < 500; ++round) {
    bool progressed = false;
    for (auto& cand : c.shrink_candidates(m, mode)) {
      if (still_fails(cand)) {
        m = std::move(cand);
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
  return m;
}

template <RuledInstance C>
json pullback_witness(const C& c, const PullbackSquare<C>& sq) {
  return json{{"kind", "pullback"},
              {"g", morphism_to_json(c, sq.g)},
              {"t", morphism_to_json(c, sq.t)},
              {"p_Y", morphism_to_json(c, sq.p_Y)},
              {"p_T", morphism_to_json(c, sq.p_T)}};
}

template <RuledInstance C>
json pushout_witness(const C& c, const PushoutSquare<C>& sq) {
  return json{{"kind", "pushout"},
              {"f", morphism_to_json(c, sq.f)},
              {"t", morphism_to_json(c, sq.t)},
              {"s_Y", morphism_to_json(c, sq.s_Y)},
              {"s_T", morphism_to_json(c, sq.s_T)}};
}

/// Samples t into cod(g), pulls g back along t and asks whether p_T is
/// still a cokernel. Stops at the first failure (minimized), otherwise
/// reports the spent budget. Never uses rules.
template <RuledInstance C>
Verdict probe_semistable_cokernel(const C& c, const Mor<C>& g, const ProbeConfig& cfg) {
  if (!is_cokernel_morphism(c, g)) throw NotACokernel();
  const auto scfg = cfg.sampler();
  auto fails = [&](const Mor<C>& t) { return !is_cokernel_morphism(c, pullback(c, g, t).p_T); };
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Rng rng = case_rng(cfg.seed, Stream::ProbeCokernel, i);
    const Obj<C> obj = c.sample_object(rng, scfg);
    const Mor<C> t = c.sample_morphism(obj, g.cod, rng, scfg);
    if (fails(t)) {
      const Mor<C> small = minimize(c, t, ShrinkMode{false, true}, fails);
      return Verdict::no("PullbackNotCokernel", pullback_witness(c, pullback(c, g, small)));
    }
  }
  return Verdict::unknown(cfg.samples);
}

/// Dual: pushouts of f along sampled t out of dom(f); s_T must stay a kernel.
template <RuledInstance C>
Verdict probe_semistable_kernel(const C& c, const Mor<C>& f, const ProbeConfig& cfg) {
  if (!is_kernel_morphism(c, f)) throw NotAKernel();
  const auto scfg = cfg.sampler();
  auto fails = [&](const Mor<C>& t) { return !is_kernel_morphism(c, pushout(c, f, t).s_T); };
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Rng rng = case_rng(cfg.seed, Stream::ProbeKernel, i);
    const Obj<C> obj = c.sample_object(rng, scfg);
    const Mor<C> t = c.sample_morphism(f.dom, obj, rng, scfg);
    if (fails(t)) {
      const Mor<C> small = minimize(c, t, ShrinkMode{true, false}, fails);
      return Verdict::no("PushoutNotKernel", pushout_witness(c, pushout(c, f, small)));
    }
  }
  return Verdict::unknown(cfg.samples);
}

/// Rule-based Yes where a justification exists (isomorphism, retraction,
/// instance rule); otherwise the probe decides between No and Unknown.
template <RuledInstance C>
Verdict decide_semistable_cokernel(const C& c, const Mor<C>& g, const ProbeConfig& cfg = {}) {
  if (!is_cokernel_morphism(c, g)) throw NotACokernel();
  if (c.is_iso(g)) return Verdict::yes("iso");
  if (c.section(g)) return Verdict::yes("retraction");
  if (auto rule = c.semistable_cokernel_rule(g)) return Verdict::yes(*rule);
  return probe_semistable_cokernel(c, g, cfg);
}

template <RuledInstance C>
Verdict decide_semistable_kernel(const C& c, const Mor<C>& f, const ProbeConfig& cfg = {}) {
  if (!is_kernel_morphism(c, f)) throw NotAKernel();
  if (c.is_iso(f)) return Verdict::yes("iso");
  if (c.retraction(f)) return Verdict::yes("coretraction");
  if (auto rule = c.semistable_kernel_rule(f)) return Verdict::yes(*rule);
  return probe_semistable_kernel(c, f, cfg);
}

/// Whether the square recorded in a No witness still fails when rebuilt
/// from its cospan/span alone.
template <RuledInstance C>
bool recheck_witness(const C& c, const json& w) {
  const std::string kind = w.at("kind").get<std::string>();
  if (kind == "pullback") {
    const auto g = morphism_from_json(c, w.at("g"));
    const auto t = morphism_from_json(c, w.at("t"));
    const auto sq = pullback(c, g, t);
    return sq.p_T == morphism_from_json(c, w.at("p_T")) && !is_cokernel_morphism(c, sq.p_T);
  }
  if (kind == "pushout") {
    const auto f = morphism_from_json(c, w.at("f"));
    const auto t = morphism_from_json(c, w.at("t"));
    const auto sq = pushout(c, f, t);
    return sq.s_T == morphism_from_json(c, w.at("s_T")) && !is_kernel_morphism(c, sq.s_T);
  }
  return false;
}

template <AdditiveInstance C>
void check_pair_invariants(const C& c, const Mor<C>& f, const Mor<C>& g) {
  if (!(f.cod == g.dom)) throw DomainMismatch("pair: cod(f) differs from dom(g)");
  if (!is_zero<C>(compose(c, f, g))) throw PreconditionViolated("pair: g o f is nonzero");
}

/// f is a kernel of g and g is a cokernel of f.
template <AdditiveInstance C>
bool is_kernel_cokernel_pair(const C& c, const Mor<C>& f, const Mor<C>& g) {
  check_pair_invariants(c, f, g);
  return is_kernel_of(c, f, g) && is_cokernel_of(c, g, f);
}

template <RuledInstance C>
json pair_to_json(const C& c, const Mor<C>& f, const Mor<C>& g) {
  return json{{"kind", "pair"}, {"f", morphism_to_json(c, f)}, {"g", morphism_to_json(c, g)}};
}

/// Membership in the class of kernel-cokernel pairs whose kernel and
/// cokernel are both semi-stable.
template <RuledInstance C>
Verdict in_maximal_exact(const C& c, const Mor<C>& f, const Mor<C>& g, const ProbeConfig& cfg = {}) {
  if (!is_kernel_cokernel_pair(c, f, g)) return Verdict::no("NotKernelCokernelPair", pair_to_json(c, f, g));
  const Verdict vk = decide_semistable_kernel(c, f, cfg);
  const Verdict vc = decide_semistable_cokernel(c, g, cfg);
  if (vk.is_no()) return Verdict::no("KernelNotSemiStable", vk.witness);
  if (vc.is_no()) return Verdict::no("CokernelNotSemiStable", vc.witness);
  if (vk.is_unknown() || vc.is_unknown()) return Verdict::unknown(vk.budget + vc.budget);
  return Verdict::yes("kernel:" + vk.reason + ",cokernel:" + vc.reason);
}

/// There is s with g o s == id and [f s]: X (+) Z -> Y is an isomorphism.
template <AdditiveInstance C>
bool is_split_exact(const C& c, const Mor<C>& f, const Mor<C>& g) {
  if (!is_kernel_cokernel_pair(c, f, g)) return false;
  const auto s = c.section(g);
  if (!s) return false;
  const auto bp = biproduct(c, f.dom, g.cod);
  return c.is_iso(copair_from(c, bp, f, *s));
}

}  // namespace exactcat::engine
