#ifndef MOTIVIC_JSON_UTIL_HPP
#define MOTIVIC_JSON_UTIL_HPP

#include <string>

#include "json.hpp"
#include "motivic/errors.hpp"
#include "motivic/laurent.hpp"

namespace motivic {

/// [[exponent, coefficient-as-string], ...] ascending by exponent.
inline nlohmann::ordered_json laurent_to_json_terms(const Laurent& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.sorted_terms()) terms.push_back({e, c.get_str()});
  return terms;
}

/// Accepts coefficients as strings or plain integers.
inline Laurent laurent_from_json_terms(const nlohmann::ordered_json& terms) {
  if (!terms.is_array()) fail(ErrorCode::SchemaError, "polynomial must be an array of terms");
  Laurent p;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2)
      fail(ErrorCode::SchemaError, "polynomial term must be [exponent, coefficient]");
    const long e = t[0].get<long>();
    mpz_class c;
    if (t[1].is_string())
      c = mpz_class(t[1].get<std::string>());
    else
      c = mpz_class(t[1].get<long>());
    p += Laurent::monomial(e, c);
  }
  return p;
}

}  // namespace motivic

#endif  // MOTIVIC_JSON_UTIL_HPP
