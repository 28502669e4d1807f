#include "hpa/json_int.hpp"

#include <cctype>

namespace hpa {

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt json_to_bigint(const json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (!is_decimal(s)) throw ParseError(what + ": \"" + s + "\" is not a decimal integer");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
  }
  throw ParseError(what + ": expected an integer, got " + std::string(j.type_name()));
}

IntVector json_to_intvector(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  IntVector out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(json_to_bigint(e, what));
  return out;
}

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json intvector_to_json(std::span<const BigInt> x) {
  json arr = json::array();
  for (const auto& v : x) arr.push_back(bigint_to_json(v));
  return arr;
}

}  // namespace hpa
