#pragma once

#include "exactcat/core/category.hpp"
#include "exactcat/linalg/json.hpp"

#include <string>

namespace exactcat {

using linalg::json;

/// Input that failed validation; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// {"category":..., "dom":{...}, "cod":{...}, "matrix":[[...]]}
template <AdditiveInstance C>
json morphism_to_json(const C& c, const Mor<C>& f) {
  return json{{"category", std::string(c.name())},
              {"dom", c.object_to_json(f.dom)},
              {"cod", c.object_to_json(f.cod)},
              {"matrix", linalg::rows_to_json(f.matrix)}};
}

template <AdditiveInstance C>
Mor<C> morphism_from_json(const C& c, const json& j) {
  if (!j.is_object()) throw ParseError("morphism must be a JSON object");
  if (j.contains("category") && j["category"] != std::string(c.name()))
    throw ParseError("category: expected \"" + std::string(c.name()) + "\", got " + j["category"].dump());
  for (const char* key : {"dom", "cod", "matrix"})
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  Obj<C> dom, cod;
  try {
    dom = c.object_from_json(j["dom"]);
  } catch (const std::exception& e) {
    throw ParseError(std::string("dom: ") + e.what());
  }
  try {
    cod = c.object_from_json(j["cod"]);
  } catch (const std::exception& e) {
    throw ParseError(std::string("cod: ") + e.what());
  }
  linalg::Matrix<typename C::Scalar> m;
  try {
    m = linalg::rows_from_json<typename C::Scalar>(j["matrix"], c.ambient_dim(cod), c.ambient_dim(dom));
  } catch (const std::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
  try {
    return c.make(dom, cod, m);
  } catch (const InvalidMorphism& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

}  // namespace exactcat
