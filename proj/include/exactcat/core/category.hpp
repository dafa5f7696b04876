#pragma once

#include "exactcat/linalg/matrix.hpp"

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace exactcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Endpoints of composed or added morphisms do not line up.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// A universal-property request whose cone or cocone does not commute.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Payload shape or subspace constraint rejected by an instance.
class InvalidMorphism : public Error {
 public:
  using Error::Error;
};

class NotAKernel : public Error {
 public:
  NotAKernel() : Error("NotAKernel: morphism is not a kernel") {}
};

class NotACokernel : public Error {
 public:
  NotACokernel() : Error("NotACokernel: morphism is not a cokernel") {}
};

/// A morphism of one of the matrix-backed instances. The payload has
/// ambient_dim(cod) rows and ambient_dim(dom) columns.
template <class Object, class Scalar>
struct Morphism {
  Object dom;
  Object cod;
  linalg::Matrix<Scalar> matrix;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// The interface an additive category with kernels and cokernels provides.
/// Everything else (pullbacks, pushouts, strictness, recognizers) is built
/// generically from these hooks.
template <class C>
concept AdditiveInstance = requires(const C& c, const typename C::Object& x, const typename C::Mor& f,
                                    const linalg::Matrix<typename C::Scalar>& m) {
  typename C::Scalar;
  typename C::Object;
  requires std::same_as<typename C::Mor, Morphism<typename C::Object, typename C::Scalar>>;
  { c.name() } -> std::convertible_to<std::string_view>;
  { c.zero_object() } -> std::same_as<typename C::Object>;
  { c.ambient_dim(x) } -> std::same_as<std::size_t>;
  { c.direct_sum(x, x) } -> std::same_as<typename C::Object>;
  { c.make(x, x, m) } -> std::same_as<typename C::Mor>;
  { c.kernel_of(f) } -> std::same_as<std::pair<typename C::Object, typename C::Mor>>;
  { c.cokernel_of(f) } -> std::same_as<std::pair<typename C::Object, typename C::Mor>>;
  // u with f o u == h, when one exists (f a monomorphism: unique).
  { c.lift(f, f) } -> std::same_as<std::optional<typename C::Mor>>;
  // u with u o f == h, when one exists (f an epimorphism: unique).
  { c.descend(f, f) } -> std::same_as<std::optional<typename C::Mor>>;
  { c.is_iso(f) } -> std::same_as<bool>;
  { c.inverse(f) } -> std::same_as<typename C::Mor>;
};

template <AdditiveInstance C>
using Mor = typename C::Mor;
template <AdditiveInstance C>
using Obj = typename C::Object;

template <AdditiveInstance C>
bool is_zero_object(const C& c, const Obj<C>& x) {
  return c.ambient_dim(x) == 0;
}

template <AdditiveInstance C>
Mor<C> identity(const C& c, const Obj<C>& x) {
  return Mor<C>{x, x, linalg::Matrix<typename C::Scalar>::identity(c.ambient_dim(x))};
}

template <AdditiveInstance C>
Mor<C> zero_morphism(const C& c, const Obj<C>& x, const Obj<C>& y) {
  return Mor<C>{x, y, linalg::Matrix<typename C::Scalar>(c.ambient_dim(y), c.ambient_dim(x))};
}

template <AdditiveInstance C>
bool is_zero(const Mor<C>& f) {
  return f.matrix.is_zero();
}

/// g o f, written in diagram order.
template <AdditiveInstance C>
Mor<C> compose(const C&, const Mor<C>& f, const Mor<C>& g) {
  if (!(f.cod == g.dom)) throw DomainMismatch("compose: codomain of the first morphism is not the domain of the second");
  return Mor<C>{f.dom, g.cod, g.matrix * f.matrix};
}

template <AdditiveInstance C>
Mor<C> add(const C&, const Mor<C>& f, const Mor<C>& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod)) throw DomainMismatch("add: morphisms have different endpoints");
  return Mor<C>{f.dom, f.cod, f.matrix + g.matrix};
}

template <AdditiveInstance C>
Mor<C> subtract(const C&, const Mor<C>& f, const Mor<C>& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod)) throw DomainMismatch("subtract: morphisms have different endpoints");
  return Mor<C>{f.dom, f.cod, f.matrix - g.matrix};
}

template <AdditiveInstance C>
Mor<C> negate(const C&, const Mor<C>& f) {
  return Mor<C>{f.dom, f.cod, -f.matrix};
}

/// Hook for instances that deliberately misreport cokernel recognition.
template <class C>
concept OverridesCokernelRecognition = requires(const C& c, const typename C::Mor& f) {
  { c.override_is_cokernel(f) } -> std::same_as<std::optional<bool>>;
};

}  // namespace exactcat
