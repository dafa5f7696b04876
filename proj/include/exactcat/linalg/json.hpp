#pragma once

#include "exactcat/linalg/matrix.hpp"

#include <json.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace exactcat::linalg {

using json = nlohmann::json;

class MatrixFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integers that fit in 64 bits are JSON numbers; anything larger is a
/// decimal string.
inline json to_json_scalar(const mpz_class& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

/// Integral rationals follow the integer rule; others are "p/q" strings.
inline json to_json_scalar(const mpq_class& v) {
  if (v.get_den() == 1) return to_json_scalar(mpz_class(v.get_num()));
  return json(v.get_str());
}

inline mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) {
    mpq_class v;
    const std::string s = j.get<std::string>();
    if (s.empty() || v.set_str(s, 10) != 0) throw MatrixFormatError("not a rational: \"" + s + "\"");
    if (v.get_den() == 0) throw MatrixFormatError("zero denominator: \"" + s + "\"");
    v.canonicalize();
    return v;
  }
  throw MatrixFormatError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline mpz_class integer_from_json(const json& j) {
  const mpq_class q = rational_from_json(j);
  if (q.get_den() != 1) throw MatrixFormatError("expected an integer, got " + j.dump());
  return q.get_num();
}

/// Nested row arrays. A matrix with zero rows has no way to carry its column
/// count here, so callers that need it pass expected shapes separately.
template <class T>
json rows_to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json_scalar(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
Matrix<T> rows_from_json(const json& rows, std::size_t expected_rows, std::size_t expected_cols) {
  if (!rows.is_array()) throw MatrixFormatError("matrix must be an array of rows");
  if (rows.size() != expected_rows)
    throw MatrixFormatError("expected " + std::to_string(expected_rows) + " rows, got " +
                            std::to_string(rows.size()));
  Matrix<T> m(expected_rows, expected_cols);
  for (std::size_t i = 0; i < expected_rows; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != expected_cols)
      throw MatrixFormatError("row " + std::to_string(i) + " must have " + std::to_string(expected_cols) +
                              " entries");
    for (std::size_t j = 0; j < expected_cols; ++j) {
      if constexpr (std::is_same_v<T, mpz_class>)
        m(i, j) = integer_from_json(row[j]);
      else
        m(i, j) = rational_from_json(row[j]);
    }
  }
  return m;
}

/// {"rows":r,"cols":c,"data":[[...]]}
template <class T>
json to_json(const Matrix<T>& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows_to_json(m)}};
}

template <class T>
Matrix<T> matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw MatrixFormatError("matrix object needs \"rows\", \"cols\" and \"data\"");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw MatrixFormatError("\"rows\" and \"cols\" must be nonnegative integers");
  return rows_from_json<T>(j["data"], j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>());
}

}  // namespace exactcat::linalg
