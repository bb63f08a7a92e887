#pragma once

#include <json.hpp>

#include <string>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/curves/cubic_form.hpp"

namespace hesse {

/// {"monomials": {"x3": "p/q", ...}}; zero coefficients are omitted.
inline nlohmann::json to_json(const CubicForm& f) {
  nlohmann::json m = nlohmann::json::object();
  for (std::size_t i = 0; i < 10; ++i) {
    if (f[i] != 0) m[cubic_monomial_keys()[i]] = to_string(f[i]);
  }
  return {{"monomials", m}};
}

inline nlohmann::json to_json(const RealCubicForm& f) {
  nlohmann::json m = nlohmann::json::object();
  for (std::size_t i = 0; i < 10; ++i) {
    if (f[i] != 0.0) m[cubic_monomial_keys()[i]] = f[i];
  }
  return {{"monomials", m}};
}

/// Accepts exact strings ("3", "-1/2", "0.25") or JSON numbers, which are
/// converted exactly from their decimal text.
inline CubicForm cubic_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("monomials") || !j["monomials"].is_object()) {
    throw Error(ErrorKind::ParseError, "expected {\"monomials\": {...}}");
  }
  CubicForm f;
  for (const auto& [key, value] : j["monomials"].items()) {
    std::size_t idx = 10;
    for (std::size_t i = 0; i < 10; ++i) {
      if (cubic_monomial_keys()[i] == key) idx = i;
    }
    if (idx == 10) throw Error(ErrorKind::ParseError, "unknown monomial '" + key + "'");
    if (value.is_string()) {
      f[idx] = parse_rational(value.get<std::string>());
    } else if (value.is_number()) {
      f[idx] = parse_rational(value.dump());
    } else {
      throw Error(ErrorKind::ParseError, "coefficient of '" + key + "' is not a number");
    }
  }
  if (f.is_zero()) throw Error(ErrorKind::ParseError, "all coefficients are zero");
  return f;
}

inline CubicForm cubic_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return cubic_from_json(j);
}

}  // namespace hesse
