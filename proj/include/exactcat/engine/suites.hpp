#pragma once

#include "exactcat/core/constructions.hpp"
#include "exactcat/core/serialize.hpp"
#include "exactcat/engine/oracles.hpp"
#include "exactcat/engine/report.hpp"
#include "exactcat/engine/semistability.hpp"
#include "exactcat/instances/samplers.hpp"

#include <functional>
#include <string>

namespace exactcat::engine {

namespace detail {

template <RuledInstance C>
json mor_json(const C& c, const Mor<C>& f) {
  return morphism_to_json(c, f);
}

template <RuledInstance C>
Report start_report(const C& c, std::string suite, const ProbeConfig& cfg) {
  Report r;
  r.suite = std::move(suite);
  r.category = std::string(c.name());
  r.config = cfg;
  return r;
}

/// Runs body(i, rng, result) for every case; exceptions become violations
/// of kind "exception" so one bad case never hides the others.
template <RuledInstance C, class Body>
Report run_suite(const C& c, std::string suite, Stream stream, const ProbeConfig& cfg, Body&& body) {
  Report r = start_report(c, std::move(suite), cfg);
  auto results = run_cases(cfg.samples, cfg.threads, [&](std::size_t i) {
    CaseResult cr;
    Rng rng = case_rng(cfg.seed, stream, i);
    try {
      body(i, rng, cr);
    } catch (const std::exception& e) {
      cr.violate("exception", i, json{{"what", e.what()}});
    }
    return cr;
  });
  merge(r, std::move(results));
  return r;
}

/// Counts a membership verdict: No is a violation, Unknown is tallied.
inline void expect_member(CaseResult& cr, const Verdict& v, const std::string& kind, std::size_t i, json diagram) {
  cr.tally(v);
  if (v.is_no()) {
    diagram["verdict"] = v.to_json();
    cr.violate(kind, i, std::move(diagram));
  }
}

}  // namespace detail

/// Kernels, cokernels, pullbacks and pushouts of sampled morphisms satisfy
/// their universal properties: mediators exist, are unique, and all
/// triangles commute exactly. Also checks dimension counts and the
/// instance's independent oracle.
template <RuledInstance C>
Report universal_suite(const C& c, const ProbeConfig& cfg) {
  const auto scfg = cfg.sampler();
  return detail::run_suite(c, "universal", Stream::Universal, cfg, [&](std::size_t i, Rng& rng, CaseResult& cr) {
    const Obj<C> x = c.sample_object(rng, scfg);
    const Obj<C> y = c.sample_object(rng, scfg);
    const Mor<C> f = c.sample_morphism(x, y, rng, scfg);
    auto fail = [&](const std::string& what) { cr.violate(what, i, json{{"f", detail::mor_json(c, f)}}); };

    const auto kd = kernel(c, f);
    const auto cd = cokernel(c, f);
    if (!is_zero<C>(compose(c, kd.inclusion, f))) fail("kernel: f o i != 0");
    if (!is_mono(c, kd.inclusion)) fail("kernel: inclusion not mono");
    if (!is_zero<C>(compose(c, f, cd.projection))) fail("cokernel: q o f != 0");
    if (!is_epi(c, cd.projection)) fail("cokernel: projection not epi");
    if (auto e = dimension_oracle(c, f, kd, cd)) fail(*e);
    if (auto e = structure_oracle(c, f, kd, cd)) fail(*e);

    // Cones that factor by construction must factor back to the same map.
    const Obj<C> w = c.sample_object(rng, scfg);
    const Mor<C> u = c.sample_morphism(w, kd.obj, rng, scfg);
    if (!(factor_through_kernel(c, kd, compose(c, u, kd.inclusion)) == u)) fail("kernel: mediator not unique");
    const Mor<C> v = c.sample_morphism(cd.obj, w, rng, scfg);
    if (!(factor_through_cokernel(c, cd, compose(c, cd.projection, v)) == v)) fail("cokernel: mediator not unique");

    // A cone that does not vanish must be rejected.
    const Mor<C> h = c.sample_morphism(w, x, rng, scfg);
    if (!is_zero<C>(compose(c, h, f))) {
      bool rejected = false;
      try {
        (void)factor_through_kernel(c, kd, h);
      } catch (const PreconditionViolated&) {
        rejected = true;
      }
      if (!rejected) fail("kernel: nonzero cone accepted");
    }

    // Pullback of (f, t) and pushout of (f, s).
    const Obj<C> tt = c.sample_object(rng, scfg);
    const Mor<C> t = c.sample_morphism(tt, y, rng, scfg);
    const auto pb = pullback(c, f, t);
    if (!(compose(c, pb.p_Y, f) == compose(c, pb.p_T, t))) fail("pullback: square does not commute");
    {
      const auto both = linalg::hstack(f.matrix, (-t.matrix));
      const std::size_t r = linalg::rank(detail::as_rational(both));
      if (c.ambient_dim(pb.obj) + r != c.ambient_dim(x) + c.ambient_dim(tt)) fail("pullback: wrong dimension");
    }
    const Mor<C> m = c.sample_morphism(w, pb.obj, rng, scfg);
    if (!(pullback_mediate(c, pb, compose(c, m, pb.p_Y), compose(c, m, pb.p_T)) == m))
      fail("pullback: mediator not unique");
    if (!is_zero<C>(compose(c, pb.p_Y, f))) {
      // (p_Y, 0) commutes only when f o p_Y == 0.
      bool rejected = false;
      try {
        (void)pullback_mediate(c, pb, pb.p_Y, zero_morphism(c, pb.obj, tt));
      } catch (const PreconditionViolated&) {
        rejected = true;
      }
      if (!rejected) fail("pullback: non-commuting cone accepted");
    }

    const Obj<C> ss = c.sample_object(rng, scfg);
    const Mor<C> s = c.sample_morphism(x, ss, rng, scfg);
    const auto po = pushout(c, f, s);
    if (!(compose(c, f, po.s_Y) == compose(c, s, po.s_T))) fail("pushout: square does not commute");
    {
      const auto both = linalg::vstack(f.matrix, (-s.matrix));
      const std::size_t r = linalg::rank(detail::as_rational(both));
      if (c.ambient_dim(po.obj) + r != c.ambient_dim(y) + c.ambient_dim(ss)) fail("pushout: wrong dimension");
    }
    const Mor<C> n = c.sample_morphism(po.obj, w, rng, scfg);
    if (!(pushout_mediate(c, po, compose(c, po.s_Y, n), compose(c, po.s_T, n)) == n))
      fail("pushout: mediator not unique");
  });
}

/// Transport of kernels along pullbacks and of cokernels along pushouts:
/// j is a kernel of p_T and c is a cokernel of s_T.
template <RuledInstance C>
Report transport_suite(const C& c, const ProbeConfig& cfg) {
  const auto scfg = cfg.sampler();
  return detail::run_suite(c, "transport", Stream::Transport, cfg, [&](std::size_t i, Rng& rng, CaseResult& cr) {
    const Obj<C> y = c.sample_object(rng, scfg);
    const Obj<C> z = c.sample_object(rng, scfg);
    const Obj<C> t_obj = c.sample_object(rng, scfg);
    const Mor<C> g = c.sample_morphism(y, z, rng, scfg);
    const Mor<C> t = c.sample_morphism(t_obj, z, rng, scfg);
    const auto kt = kernel_transport(c, g, t);
    auto kdiag = [&] {
      return json{{"g", detail::mor_json(c, g)}, {"t", detail::mor_json(c, t)}, {"j", detail::mor_json(c, kt.j)},
                  {"p_T", detail::mor_json(c, kt.square.p_T)}};
    };
    if (!(compose(c, kt.j, kt.square.p_Y) == kt.kernel_of_g.inclusion)) cr.violate("kernel transport: p_Y o j != i_g", i, kdiag());
    if (!is_zero<C>(compose(c, kt.j, kt.square.p_T))) cr.violate("kernel transport: p_T o j != 0", i, kdiag());
    if (!is_kernel_of(c, kt.j, kt.square.p_T)) cr.violate("kernel transport: j is not a kernel of p_T", i, kdiag());

    const Obj<C> x = c.sample_object(rng, scfg);
    const Obj<C> s_obj = c.sample_object(rng, scfg);
    const Mor<C> f = c.sample_morphism(x, y, rng, scfg);
    const Mor<C> s = c.sample_morphism(x, s_obj, rng, scfg);
    const auto ct = cokernel_transport(c, f, s);
    auto cdiag = [&] {
      return json{{"f", detail::mor_json(c, f)}, {"t", detail::mor_json(c, s)}, {"c", detail::mor_json(c, ct.c)},
                  {"s_T", detail::mor_json(c, ct.square.s_T)}};
    };
    if (!(compose(c, ct.square.s_Y, ct.c) == ct.cokernel_of_f.projection))
      cr.violate("cokernel transport: c o s_Y != c_f", i, cdiag());
    if (!is_zero<C>(compose(c, ct.square.s_T, ct.c))) cr.violate("cokernel transport: c o s_T != 0", i, cdiag());
    if (!is_cokernel_of(c, ct.c, ct.square.s_T)) cr.violate("cokernel transport: c is not a cokernel of s_T", i, cdiag());
  });
}

/// The exact-structure axioms for the maximal class, one axiom per case in
/// rotation: E0, E0op, E1, E1op, E2, E2op, closure under isomorphisms.
template <RuledInstance C>
Report axiom_suite(const C& c, const ProbeConfig& cfg) {
  const auto scfg = cfg.sampler();
  return detail::run_suite(c, "axioms", Stream::Axioms, cfg, [&](std::size_t i, Rng& rng, CaseResult& cr) {
    auto member = [&](const Mor<C>& f, const Mor<C>& g, const std::string& axiom) {
      const Verdict v = in_maximal_exact(c, f, g, cfg);
      detail::expect_member(cr, v, axiom, i, pair_to_json(c, f, g));
      return v;
    };
    // Admissible mono/epi: (h, cok h) resp. (ker h, h) is in the class.
    auto admissible_mono = [&](const Mor<C>& h, const std::string& axiom) {
      member(h, cokernel(c, h).projection, axiom);
    };
    auto admissible_epi = [&](const Mor<C>& h, const std::string& axiom) {
      member(kernel(c, h).inclusion, h, axiom);
    };
    // Premises: sampled pairs that are not decided members carry no claim.
    auto premise = [&](const Mor<C>& f, const Mor<C>& g) {
      const Verdict v = in_maximal_exact(c, f, g, cfg);
      if (v.is_unknown()) ++cr.unknown;
      return v.is_yes();
    };

    switch (i % 7) {
      case 0: {
        const Obj<C> x = c.sample_object(rng, scfg);
        member(identity(c, x), zero_morphism(c, x, c.zero_object()), "E0");
        break;
      }
      case 1: {
        const Obj<C> x = c.sample_object(rng, scfg);
        member(zero_morphism(c, c.zero_object(), x), identity(c, x), "E0op");
        break;
      }
      case 2: {
        // f1 = ker of a random map out of dom(f2), f2 from a sampled pair.
        const auto p2 = sample_exact_pair(c, rng, scfg);
        const Mor<C> f1 = sample_kernel_into(c, p2.f.dom, rng, scfg);
        const auto p1 = ExactPair<C>{f1, cokernel(c, f1).projection};
        if (!premise(p1.f, p1.g) || !premise(p2.f, p2.g)) break;
        admissible_mono(compose(c, p1.f, p2.f), "E1");
        break;
      }
      case 3: {
        const auto p1 = sample_exact_pair(c, rng, scfg);
        const Mor<C> g2 = sample_cokernel_from(c, p1.g.cod, rng, scfg);
        const auto p2 = ExactPair<C>{kernel(c, g2).inclusion, g2};
        if (!premise(p1.f, p1.g) || !premise(p2.f, p2.g)) break;
        admissible_epi(compose(c, p1.g, p2.g), "E1op");
        break;
      }
      case 4: {
        const auto p = sample_exact_pair(c, rng, scfg);
        if (!premise(p.f, p.g)) break;
        const Obj<C> tt = c.sample_object(rng, scfg);
        const Mor<C> t = c.sample_morphism(p.f.dom, tt, rng, scfg);
        const auto ct = cokernel_transport(c, p.f, t);
        member(ct.square.s_T, ct.c, "E2");
        break;
      }
      case 5: {
        const auto p = sample_exact_pair(c, rng, scfg);
        if (!premise(p.f, p.g)) break;
        const Obj<C> tt = c.sample_object(rng, scfg);
        const Mor<C> t = c.sample_morphism(tt, p.g.cod, rng, scfg);
        const auto kt = kernel_transport(c, p.g, t);
        // The kernel of g is identified with dom(f) through the pair.
        const Mor<C> k = pullback_mediate(c, kt.square, p.f, zero_morphism(c, p.f.dom, tt));
        member(k, kt.square.p_T, "E2op");
        break;
      }
      default: {
        const auto p = sample_exact_pair(c, rng, scfg);
        const Verdict before = in_maximal_exact(c, p.f, p.g, cfg);
        const Mor<C> ix = c.sample_automorphism(p.f.dom, rng, scfg);
        const Mor<C> iy = c.sample_automorphism(p.f.cod, rng, scfg);
        const Mor<C> iz = c.sample_automorphism(p.g.cod, rng, scfg);
        const Mor<C> f2 = compose(c, compose(c, c.inverse(ix), p.f), iy);
        const Mor<C> g2 = compose(c, compose(c, c.inverse(iy), p.g), iz);
        const Verdict after = in_maximal_exact(c, f2, g2, cfg);
        cr.tally(after);
        if (before.outcome != after.outcome && !before.is_unknown() && !after.is_unknown())
          cr.violate("iso-closure", i,
                     json{{"before", pair_to_json(c, p.f, p.g)}, {"after", pair_to_json(c, f2, g2)},
                          {"verdict_before", before.to_json()}, {"verdict_after", after.to_json()}});
        break;
      }
    }
  });
}

namespace detail {

/// Semi-stability of a morphism that need not be a cokernel at all: a
/// non-cokernel is certainly not a semi-stable cokernel.
template <RuledInstance C>
Outcome cokernel_status(const C& c, const Mor<C>& g, const ProbeConfig& cfg) {
  if (!is_cokernel_morphism(c, g)) return Outcome::No;
  return decide_semistable_cokernel(c, g, cfg).outcome;
}

template <RuledInstance C>
Outcome kernel_status(const C& c, const Mor<C>& f, const ProbeConfig& cfg) {
  if (!is_kernel_morphism(c, f)) return Outcome::No;
  return decide_semistable_kernel(c, f, cfg).outcome;
}

}  // namespace detail

/// Stability of semi-stable cokernels and kernels under composition and
/// cancellation, with h = g o f:
///   (a) f, g semi-stable cokernels  =>  h semi-stable cokernel
///   (b) f, g semi-stable kernels    =>  h semi-stable kernel
///   (c) h semi-stable cokernel      =>  g semi-stable cokernel
///   (d) h semi-stable kernel        =>  f semi-stable kernel
/// Unknown is compatible with everything.
template <RuledInstance C>
Report kelly_suite(const C& c, const ProbeConfig& cfg) {
  const auto scfg = cfg.sampler();
  return detail::run_suite(c, "kelly", Stream::Kelly, cfg, [&](std::size_t i, Rng& rng, CaseResult& cr) {
    Mor<C> f, g;
    switch (i % 3) {
      case 0: {
        const Obj<C> x = c.sample_object(rng, scfg);
        const Obj<C> y = c.sample_object(rng, scfg);
        const Obj<C> z = c.sample_object(rng, scfg);
        f = c.sample_morphism(x, y, rng, scfg);
        g = c.sample_morphism(y, z, rng, scfg);
        break;
      }
      case 1: {
        const Obj<C> x = c.sample_object(rng, scfg);
        f = sample_cokernel_from(c, x, rng, scfg);
        g = sample_cokernel_from(c, f.cod, rng, scfg);
        break;
      }
      default: {
        const Obj<C> z = c.sample_object(rng, scfg);
        g = sample_kernel_into(c, z, rng, scfg);
        f = sample_kernel_into(c, g.dom, rng, scfg);
        break;
      }
    }
    const Mor<C> h = compose(c, f, g);
    const Outcome fc = detail::cokernel_status(c, f, cfg), gc = detail::cokernel_status(c, g, cfg),
                  hc = detail::cokernel_status(c, h, cfg);
    const Outcome fk = detail::kernel_status(c, f, cfg), gk = detail::kernel_status(c, g, cfg),
                  hk = detail::kernel_status(c, h, cfg);
    for (Outcome o : {fc, gc, hc, fk, gk, hk}) {
      if (o == Outcome::Yes) ++cr.yes;
      else if (o == Outcome::No) ++cr.no;
      else ++cr.unknown;
    }
    auto diagram = [&] {
      return json{{"f", detail::mor_json(c, f)},
                  {"g", detail::mor_json(c, g)},
                  {"h", detail::mor_json(c, h)},
                  {"status", json{{"f_cokernel", to_string(fc)}, {"g_cokernel", to_string(gc)},
                                  {"h_cokernel", to_string(hc)}, {"f_kernel", to_string(fk)},
                                  {"g_kernel", to_string(gk)}, {"h_kernel", to_string(hk)}}}};
    };
    using enum Outcome;
    if (fc == Yes && gc == Yes && hc == No) cr.violate("(a)", i, diagram());
    if (fk == Yes && gk == Yes && hk == No) cr.violate("(b)", i, diagram());
    if (hc == Yes && gc == No) cr.violate("(c)", i, diagram());
    if (hk == Yes && fk == No) cr.violate("(d)", i, diagram());
  });
}

/// Pasting: with the right square a pullback, the left square is a
/// pullback iff the outer rectangle is.
///
///   W --f m--> P --gP--> Zc
///   | a m      | b       | c
///   X'' --f'-> Y' --g'-> Z'
template <RuledInstance C>
std::optional<json> pasting_check(const C& c, Rng& rng, const SamplerConfig& scfg) {
  const Obj<C> y2 = c.sample_object(rng, scfg);
  const Obj<C> z2 = c.sample_object(rng, scfg);
  const Obj<C> zc = c.sample_object(rng, scfg);
  const Mor<C> g2 = c.sample_morphism(y2, z2, rng, scfg);
  const Mor<C> cc = c.sample_morphism(zc, z2, rng, scfg);
  const auto right = pullback(c, g2, cc);
  const Mor<C>& b = right.p_Y;
  const Mor<C>& gp = right.p_T;
  const Obj<C> x2 = c.sample_object(rng, scfg);
  const Mor<C> f2 = c.sample_morphism(x2, y2, rng, scfg);
  const auto left = pullback(c, b, f2);
  Mor<C> m = identity(c, left.obj);
  if (rng.percent(50)) {
    const Obj<C> w = c.sample_object(rng, scfg);
    m = c.sample_morphism(w, left.obj, rng, scfg);
  }
  const Mor<C> top = compose(c, m, left.p_Y);
  const Mor<C> side = compose(c, m, left.p_T);
  const bool left_pb = is_pullback_square(c, b, f2, top, side);
  const bool outer_pb = is_pullback_square(c, cc, compose(c, f2, g2), compose(c, top, gp), side);
  if (left_pb == outer_pb) return std::nullopt;
  return json{{"g'", morphism_to_json(c, g2)},       {"c", morphism_to_json(c, cc)},
              {"f'", morphism_to_json(c, f2)},       {"top", morphism_to_json(c, top)},
              {"side", morphism_to_json(c, side)},   {"left_pullback", left_pb},
              {"outer_pullback", outer_pb}};
}

/// Rebuilds the diagrams of the proof that the maximal class is closed
/// under composition of admissible epimorphisms, for sampled members
/// (f, g): X -> Y -> Z and (f', g'): X' -> Z -> V:
///   k = ker(g' o g), alpha with f' o alpha = g o k,
///   the square k, alpha over (g, f') is a pullback,
///   for the pullback (p_Y, p_R) of g along a sampled r, the pair
///   ((-p_R; p_Y), [r g]) is a member, the pullback is also a pushout,
///   and the transported (k_B, p_R) is a member,
///   omega_X', omega_Z over (f', r) with r = diag(f', id_Y) is a pushout,
///   r o p = sigma o k with p = (-alpha; k), sigma = (-g; id_Y),
///   (k, g' o g) is a member.
/// Every failure is recorded with the full trace of named morphisms.
template <RuledInstance C>
Report theorem_diagram_suite(const C& c, const ProbeConfig& cfg) {
  const auto scfg = cfg.sampler();
  return detail::run_suite(c, "theorem", Stream::Theorem, cfg, [&](std::size_t i, Rng& rng, CaseResult& cr) {
    const auto p1 = sample_exact_pair(c, rng, scfg);
    const Mor<C>& f = p1.f;
    const Mor<C>& g = p1.g;
    const auto p2 = exact_pair_through(c, g.cod, rng, scfg);
    const Mor<C>& f2 = p2.f;
    const Mor<C>& g2 = p2.g;
    const Verdict v1 = in_maximal_exact(c, f, g, cfg);
    const Verdict v2 = in_maximal_exact(c, f2, g2, cfg);
    if (!v1.is_yes() || !v2.is_yes()) {
      ++cr.unknown;
      return;
    }

    const Mor<C> h = compose(c, g, g2);
    const auto kd = kernel(c, h);
    const Mor<C>& k = kd.inclusion;
    const KernelData<C> f2_as_kernel{f2.dom, f2, g2};
    const Mor<C> alpha = factor_through_kernel(c, f2_as_kernel, compose(c, k, g));

    const auto sum_xy = biproduct(c, f2.dom, g.dom);
    const auto sum_zy = biproduct(c, g.cod, g.dom);
    const Mor<C> p = pair_into(c, sum_xy, negate(c, alpha), k);
    const Mor<C> q = copair_from(c, sum_xy, f2, g);
    const Mor<C> r = add(c, compose(c, compose(c, sum_xy.proj_left, f2), sum_zy.inj_left),
                         compose(c, sum_xy.proj_right, sum_zy.inj_right));
    const Mor<C> sigma = pair_into(c, sum_zy, negate(c, g), identity(c, g.dom));

    auto trace = [&] {
      return json{{"f", detail::mor_json(c, f)},         {"g", detail::mor_json(c, g)},
                  {"f'", detail::mor_json(c, f2)},       {"g'", detail::mor_json(c, g2)},
                  {"k", detail::mor_json(c, k)},         {"alpha", detail::mor_json(c, alpha)},
                  {"p", detail::mor_json(c, p)},         {"q", detail::mor_json(c, q)},
                  {"r", detail::mor_json(c, r)},         {"sigma", detail::mor_json(c, sigma)}};
    };

    if (!is_pullback_square(c, g, f2, k, alpha)) cr.violate("square k, alpha over (g, f') is not a pullback", i, trace());

    detail::expect_member(cr, in_maximal_exact(c, p, q, cfg), "(p, q) is not in the maximal class", i, trace());

    // The same construction for a sampled r: R -> Z.
    {
      const Obj<C> rr = c.sample_object(rng, scfg);
      const Mor<C> r_s = c.sample_morphism(rr, g.cod, rng, scfg);
      const auto sq = pullback(c, g, r_s);
      const auto sum_ry = biproduct(c, rr, g.dom);
      const Mor<C> pb = pair_into(c, sum_ry, negate(c, sq.p_T), sq.p_Y);
      const Mor<C> qb = copair_from(c, sum_ry, r_s, g);
      const Mor<C> kb = pullback_mediate(c, sq, f, zero_morphism(c, f.dom, rr));
      auto diag = [&] {
        json d = trace();
        d["r_sampled"] = detail::mor_json(c, r_s);
        d["p_R"] = detail::mor_json(c, sq.p_T);
        d["p_Y"] = detail::mor_json(c, sq.p_Y);
        d["k_B"] = detail::mor_json(c, kb);
        return d;
      };
      detail::expect_member(cr, in_maximal_exact(c, pb, qb, cfg), "((-p_R; p_Y), [r g]) is not in the maximal class", i,
                            diag());
      detail::expect_member(cr, in_maximal_exact(c, kb, sq.p_T, cfg), "E2op: (k_B, p_R) is not in the maximal class", i, diag());
      if (!is_pushout_square(c, f, kb, sum_ry.inj_right, pb))
        cr.violate("square f, k_B under (omega_Y, (-p_R; p_Y)) is not a pushout", i, diag());
      if (!is_pushout_square(c, sq.p_Y, sq.p_T, g, r_s))
        cr.violate("pullback of g along r is not a pushout", i, diag());
    }

    if (!is_pushout_square(c, f2, sum_xy.inj_left, sum_zy.inj_left, r))
      cr.violate("square f', omega_X' under (omega_Z, r) is not a pushout", i, trace());
    if (!(compose(c, p, r) == compose(c, k, sigma))) cr.violate("r o p != sigma o k", i, trace());
    detail::expect_member(cr, in_maximal_exact(c, k, h, cfg), "E1op: (k, g' o g) is not in the maximal class", i, trace());

    if (auto bad = pasting_check(c, rng, scfg)) cr.violate("pasting", i, *bad);
  });
}

/// Three probes of how far the instance is from abelian:
///   (i) a mono and epi that is not iso witnesses non-abelianness,
///   (ii) fbar must be mono and epi for every sampled f (semi-abelian),
///   (iii) every sampled kernel-cokernel pair must not be refuted as a
///       member of the maximal class (quasi-abelian).
template <RuledInstance C>
Report structure_probe(const C& c, const ProbeConfig& cfg) {
  const auto scfg = cfg.sampler();
  std::vector<std::optional<Mor<C>>> mono_epi(cfg.samples);
  Report r = detail::run_suite(c, "structure", Stream::Structure, cfg, [&](std::size_t i, Rng& rng, CaseResult& cr) {
    const Obj<C> x = c.sample_object(rng, scfg);
    const Obj<C> y = c.sample_object(rng, scfg);
    const Mor<C> f = c.sample_morphism(x, y, rng, scfg);
    const auto prof = classify(c, f);
    if (prof.mono && prof.epi && !prof.iso) mono_epi[i] = f;
    const auto fbar = induced_strict_map(c, f).fbar;
    if (!is_mono(c, fbar) || !is_epi(c, fbar))
      cr.violate("semi-abelian: fbar not mono and epi", i,
                 json{{"f", detail::mor_json(c, f)}, {"fbar", detail::mor_json(c, fbar)}});
    const auto p = sample_exact_pair(c, rng, scfg);
    detail::expect_member(cr, in_maximal_exact(c, p.f, p.g, cfg), "quasi-abelian: kernel-cokernel pair refuted", i,
                          pair_to_json(c, p.f, p.g));
  });
  json witness = nullptr;
  for (const auto& w : mono_epi) {
    if (!w) continue;
    auto is_witness = [&](const Mor<C>& m) {
      const auto prof = classify(c, m);
      return prof.mono && prof.epi && !prof.iso;
    };
    const Mor<C> small = minimize(c, *w, ShrinkMode{}, is_witness);
    const auto prof = classify(c, small);
    witness = json{{"kind", "mono-epi-not-iso"},
                   {"f", morphism_to_json(c, small)},
                   {"profile", json{{"mono", prof.mono}, {"epi", prof.epi}, {"iso", prof.iso},
                                    {"is_kernel", prof.is_kernel}, {"is_cokernel", prof.is_cokernel},
                                    {"strict", prof.strict}}}};
    r.witnesses.push_back(witness);
    break;
  }
  r.summary["abelian_witness_found"] = !witness.is_null();
  return r;
}

/// Maximality against the split structure: split pairs are never refuted.
template <RuledInstance C>
Report maximality_suite(const C& c, const ProbeConfig& cfg) {
  const auto scfg = cfg.sampler();
  Report r = detail::run_suite(c, "maximality", Stream::Maximality, cfg, [&](std::size_t i, Rng& rng, CaseResult& cr) {
    const auto p = sample_exact_pair(c, rng, scfg);
    const bool split = is_split_exact(c, p.f, p.g);
    const Verdict v = in_maximal_exact(c, p.f, p.g, cfg);
    cr.tally(v);
    if (split) cr.witnesses.push_back(nullptr);
    if (split && v.is_no()) {
      json d = pair_to_json(c, p.f, p.g);
      d["verdict"] = v.to_json();
      cr.violate("split pair refuted", i, std::move(d));
    }
  });
  // Witness slots only counted split pairs; keep the count, drop the nulls.
  r.summary["split"] = r.witnesses.size();
  r.witnesses.clear();
  return r;
}

/// Every rule-based Yes is cross-checked by a short probe; a probe No
/// against a rule Yes aborts the report with RuleContradiction.
template <RuledInstance C>
Report coherence_suite(const C& c, const ProbeConfig& cfg) {
  const auto scfg = cfg.sampler();
  return detail::run_suite(c, "coherence", Stream::Coherence, cfg, [&](std::size_t, Rng& rng, CaseResult& cr) {
    const auto p = sample_exact_pair(c, rng, scfg);
    ProbeConfig probe = cfg;
    probe.seed = rng.next();
    probe.samples = 8;
    if (is_cokernel_morphism(c, p.g)) {
      const Verdict rule = decide_semistable_cokernel(c, p.g, cfg);
      const Verdict found = probe_semistable_cokernel(c, p.g, probe);
      cr.tally(rule);
      if (rule.is_yes() && found.is_no())
        cr.contradiction = json{{"kind", "RuleContradiction"}, {"rule", rule.to_json()}, {"probe", found.to_json()}};
    }
    if (is_kernel_morphism(c, p.f) && !cr.contradiction) {
      const Verdict rule = decide_semistable_kernel(c, p.f, cfg);
      const Verdict found = probe_semistable_kernel(c, p.f, probe);
      cr.tally(rule);
      if (rule.is_yes() && found.is_no())
        cr.contradiction = json{{"kind", "RuleContradiction"}, {"rule", rule.to_json()}, {"probe", found.to_json()}};
    }
  });
}

}  // namespace exactcat::engine
