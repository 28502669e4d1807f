#pragma once

// JSON <-> big integer helpers. Integers that fit in 64 bits are written as
// JSON numbers, larger ones as decimal strings; readers accept both.

#include "hpa/core.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace hpa {

using json = nlohmann::json;

BigInt json_to_bigint(const json& j, const std::string& what);
IntVector json_to_intvector(const json& j, const std::string& what);
json bigint_to_json(const BigInt& v);
json intvector_to_json(std::span<const BigInt> x);

}  // namespace hpa
