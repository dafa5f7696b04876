#pragma once

#include "exactcat/core/category.hpp"

namespace exactcat {

template <AdditiveInstance C>
struct BiproductData {
  Obj<C> obj;
  Mor<C> inj_left;
  Mor<C> inj_right;
  Mor<C> proj_left;
  Mor<C> proj_right;
};

template <AdditiveInstance C>
BiproductData<C> biproduct(const C& c, const Obj<C>& x, const Obj<C>& y) {
  using M = linalg::Matrix<typename C::Scalar>;
  const std::size_t n = c.ambient_dim(x);
  const std::size_t m = c.ambient_dim(y);
  const Obj<C> s = c.direct_sum(x, y);
  M il(n + m, n), ir(n + m, m), pl(n, n + m), pr(m, n + m);
  for (std::size_t i = 0; i < n; ++i) il(i, i) = pl(i, i) = 1;
  for (std::size_t i = 0; i < m; ++i) ir(n + i, i) = pr(i, n + i) = 1;
  return {s, Mor<C>{x, s, il}, Mor<C>{y, s, ir}, Mor<C>{s, x, pl}, Mor<C>{s, y, pr}};
}

/// <a, b>: W -> X (+) Y
template <AdditiveInstance C>
Mor<C> pair_into(const C& c, const BiproductData<C>& bp, const Mor<C>& a, const Mor<C>& b) {
  return add(c, compose(c, a, bp.inj_left), compose(c, b, bp.inj_right));
}

/// [a b]: X (+) Y -> W
template <AdditiveInstance C>
Mor<C> copair_from(const C& c, const BiproductData<C>& bp, const Mor<C>& a, const Mor<C>& b) {
  return add(c, compose(c, bp.proj_left, a), compose(c, bp.proj_right, b));
}

template <AdditiveInstance C>
struct KernelData {
  Obj<C> obj;
  Mor<C> inclusion;
  Mor<C> of;
};

template <AdditiveInstance C>
struct CokernelData {
  Obj<C> obj;
  Mor<C> projection;
  Mor<C> of;
};

template <AdditiveInstance C>
KernelData<C> kernel(const C& c, const Mor<C>& f) {
  auto [obj, inc] = c.kernel_of(f);
  return {std::move(obj), std::move(inc), f};
}

template <AdditiveInstance C>
CokernelData<C> cokernel(const C& c, const Mor<C>& f) {
  auto [obj, proj] = c.cokernel_of(f);
  return {std::move(obj), std::move(proj), f};
}

/// The unique u with inclusion o u == h.
template <AdditiveInstance C>
Mor<C> factor_through_kernel(const C& c, const KernelData<C>& kd, const Mor<C>& h) {
  if (!(h.cod == kd.of.dom)) throw DomainMismatch("factor_through_kernel: h does not land in the domain");
  if (!is_zero<C>(compose(c, h, kd.of)))
    throw PreconditionViolated("factor_through_kernel: composite with the kerneled morphism is nonzero");
  auto u = c.lift(kd.inclusion, h);
  if (!u) throw Error("factor_through_kernel: instance kernel failed its universal property");
  return *u;
}

/// The unique u with u o projection == h.
template <AdditiveInstance C>
Mor<C> factor_through_cokernel(const C& c, const CokernelData<C>& cd, const Mor<C>& h) {
  if (!(h.dom == cd.of.cod)) throw DomainMismatch("factor_through_cokernel: h does not start at the codomain");
  if (!is_zero<C>(compose(c, cd.of, h)))
    throw PreconditionViolated("factor_through_cokernel: composite with the cokerneled morphism is nonzero");
  auto u = c.descend(cd.projection, h);
  if (!u) throw Error("factor_through_cokernel: instance cokernel failed its universal property");
  return *u;
}

/// P --p_T--> T
/// |p_Y       | t
/// Y ---g---> Z
/// built as the kernel of g o pi_Y - t o pi_T on Y (+) T.
template <AdditiveInstance C>
struct PullbackSquare {
  Mor<C> g;
  Mor<C> t;
  Obj<C> obj;
  Mor<C> p_Y;
  Mor<C> p_T;
  BiproductData<C> sum;
  KernelData<C> inclusion;
};

/// X ---f---> Y
/// |t         | s_Y
/// T --s_T--> S
/// built as the cokernel of w_Y o f - w_T o t into Y (+) T.
template <AdditiveInstance C>
struct PushoutSquare {
  Mor<C> f;
  Mor<C> t;
  Obj<C> obj;
  Mor<C> s_Y;
  Mor<C> s_T;
  BiproductData<C> sum;
  CokernelData<C> projection;
};

template <AdditiveInstance C>
PullbackSquare<C> pullback(const C& c, const Mor<C>& g, const Mor<C>& t) {
  if (!(g.cod == t.cod)) throw DomainMismatch("pullback: g and t have different codomains");
  auto bp = biproduct(c, g.dom, t.dom);
  const Mor<C> d = subtract(c, compose(c, bp.proj_left, g), compose(c, bp.proj_right, t));
  auto kd = kernel(c, d);
  Mor<C> p_y = compose(c, kd.inclusion, bp.proj_left);
  Mor<C> p_t = compose(c, kd.inclusion, bp.proj_right);
  Obj<C> obj = kd.obj;
  return {g, t, std::move(obj), std::move(p_y), std::move(p_t), std::move(bp), std::move(kd)};
}

template <AdditiveInstance C>
PushoutSquare<C> pushout(const C& c, const Mor<C>& f, const Mor<C>& t) {
  if (!(f.dom == t.dom)) throw DomainMismatch("pushout: f and t have different domains");
  auto bp = biproduct(c, f.cod, t.cod);
  const Mor<C> d = subtract(c, compose(c, f, bp.inj_left), compose(c, t, bp.inj_right));
  auto cd = cokernel(c, d);
  Mor<C> s_y = compose(c, bp.inj_left, cd.projection);
  Mor<C> s_t = compose(c, bp.inj_right, cd.projection);
  Obj<C> obj = cd.obj;
  return {f, t, std::move(obj), std::move(s_y), std::move(s_t), std::move(bp), std::move(cd)};
}

/// The unique m with p_Y o m == l_Y and p_T o m == l_T.
template <AdditiveInstance C>
Mor<C> pullback_mediate(const C& c, const PullbackSquare<C>& sq, const Mor<C>& l_y, const Mor<C>& l_t) {
  if (!(l_y.dom == l_t.dom)) throw DomainMismatch("pullback_mediate: cone legs have different domains");
  if (!(compose(c, l_y, sq.g) == compose(c, l_t, sq.t)))
    throw PreconditionViolated("pullback_mediate: cone does not commute");
  return factor_through_kernel(c, sq.inclusion, pair_into(c, sq.sum, l_y, l_t));
}

/// The unique m with m o s_Y == l_Y and m o s_T == l_T.
template <AdditiveInstance C>
Mor<C> pushout_mediate(const C& c, const PushoutSquare<C>& sq, const Mor<C>& l_y, const Mor<C>& l_t) {
  if (!(l_y.cod == l_t.cod)) throw DomainMismatch("pushout_mediate: cocone legs have different codomains");
  if (!(compose(c, sq.f, l_y) == compose(c, sq.t, l_t)))
    throw PreconditionViolated("pushout_mediate: cocone does not commute");
  return factor_through_cokernel(c, sq.projection, copair_from(c, sq.sum, l_y, l_t));
}

/// Is the commuting square (a: W -> Y, b: W -> T) over the cospan (g, t) a
/// pullback? Equivalent to the comparison map into the constructed
/// pullback being an isomorphism.
template <AdditiveInstance C>
bool is_pullback_square(const C& c, const Mor<C>& g, const Mor<C>& t, const Mor<C>& a, const Mor<C>& b) {
  if (!(compose(c, a, g) == compose(c, b, t))) return false;
  const auto sq = pullback(c, g, t);
  return c.is_iso(pullback_mediate(c, sq, a, b));
}

/// Is the commuting square (a: Y -> W, b: T -> W) under the span (f, t) a
/// pushout?
template <AdditiveInstance C>
bool is_pushout_square(const C& c, const Mor<C>& f, const Mor<C>& t, const Mor<C>& a, const Mor<C>& b) {
  if (!(compose(c, f, a) == compose(c, t, b))) return false;
  const auto sq = pushout(c, f, t);
  return c.is_iso(pushout_mediate(c, sq, a, b));
}

/// f == image_inclusion o fbar o coimage_projection with
/// coimage = cok ker f and image = ker cok f.
template <AdditiveInstance C>
struct StrictFactorization {
  Mor<C> fbar;
  Mor<C> coimage_projection;
  Mor<C> image_inclusion;
};

template <AdditiveInstance C>
StrictFactorization<C> induced_strict_map(const C& c, const Mor<C>& f) {
  const auto ker = kernel(c, f);
  const auto coim = cokernel(c, ker.inclusion);
  const auto cok = cokernel(c, f);
  const auto im = kernel(c, cok.projection);
  const Mor<C> through_coimage = factor_through_cokernel(c, coim, f);
  Mor<C> fbar = factor_through_kernel(c, im, through_coimage);
  return {std::move(fbar), coim.projection, im.inclusion};
}

template <AdditiveInstance C>
bool is_mono(const C& c, const Mor<C>& f) {
  return is_zero_object(c, c.kernel_of(f).first);
}

template <AdditiveInstance C>
bool is_epi(const C& c, const Mor<C>& f) {
  return is_zero_object(c, c.cokernel_of(f).first);
}

/// f is a kernel iff its factorization through ker(cok f) is an iso.
template <AdditiveInstance C>
bool is_kernel_morphism(const C& c, const Mor<C>& f) {
  const auto im = kernel(c, cokernel(c, f).projection);
  return c.is_iso(factor_through_kernel(c, im, f));
}

/// f is a cokernel iff its factorization through cok(ker f) is an iso.
template <AdditiveInstance C>
bool is_cokernel_morphism(const C& c, const Mor<C>& f) {
  if constexpr (OverridesCokernelRecognition<C>) {
    if (auto forced = c.override_is_cokernel(f)) return *forced;
  }
  const auto coim = cokernel(c, kernel(c, f).inclusion);
  return c.is_iso(factor_through_cokernel(c, coim, f));
}

struct MorphismProfile {
  bool mono = false;
  bool epi = false;
  bool iso = false;
  bool is_kernel = false;
  bool is_cokernel = false;
  bool strict = false;

  friend bool operator==(const MorphismProfile&, const MorphismProfile&) = default;
};

template <AdditiveInstance C>
MorphismProfile classify(const C& c, const Mor<C>& f) {
  MorphismProfile p;
  p.mono = is_mono(c, f);
  p.epi = is_epi(c, f);
  p.iso = c.is_iso(f);
  p.is_kernel = is_kernel_morphism(c, f);
  p.is_cokernel = is_cokernel_morphism(c, f);
  p.strict = c.is_iso(induced_strict_map(c, f).fbar);
  return p;
}

/// Transport of the kernel of g along the pullback of (g, t): j with
/// p_Y o j == i_g and p_T o j == 0.
template <AdditiveInstance C>
struct KernelTransport {
  PullbackSquare<C> square;
  KernelData<C> kernel_of_g;
  Mor<C> j;
};

template <AdditiveInstance C>
KernelTransport<C> kernel_transport(const C& c, const Mor<C>& g, const Mor<C>& t) {
  auto sq = pullback(c, g, t);
  auto kd = kernel(c, g);
  Mor<C> j = pullback_mediate(c, sq, kd.inclusion, zero_morphism(c, kd.obj, t.dom));
  return {std::move(sq), std::move(kd), std::move(j)};
}

/// Transport of the cokernel of f along the pushout of (f, t): c with
/// c o s_Y == c_f and c o s_T == 0.
template <AdditiveInstance C>
struct CokernelTransport {
  PushoutSquare<C> square;
  CokernelData<C> cokernel_of_f;
  Mor<C> c;
};

template <AdditiveInstance C>
CokernelTransport<C> cokernel_transport(const C& c, const Mor<C>& f, const Mor<C>& t) {
  auto sq = pushout(c, f, t);
  auto cd = cokernel(c, f);
  Mor<C> q = pushout_mediate(c, sq, cd.projection, zero_morphism(c, t.cod, cd.obj));
  return {std::move(sq), std::move(cd), std::move(q)};
}

/// j is a kernel of k: k o j == 0 and the comparison with ker k is an iso.
template <AdditiveInstance C>
bool is_kernel_of(const C& c, const Mor<C>& j, const Mor<C>& k) {
  if (!(j.cod == k.dom) || !is_zero<C>(compose(c, j, k))) return false;
  return c.is_iso(factor_through_kernel(c, kernel(c, k), j));
}

/// q is a cokernel of f: q o f == 0 and the comparison with cok f is an iso.
template <AdditiveInstance C>
bool is_cokernel_of(const C& c, const Mor<C>& q, const Mor<C>& f) {
  if (!(f.cod == q.dom) || !is_zero<C>(compose(c, f, q))) return false;
  if constexpr (OverridesCokernelRecognition<C>) {
    if (auto forced = c.override_is_cokernel(q); forced && !*forced) return false;
  }
  return c.is_iso(factor_through_cokernel(c, cokernel(c, f), q));
}

}  // namespace exactcat
