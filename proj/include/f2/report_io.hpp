#pragma once

#include <json.hpp>

#include <string>

#include "f2/increment.hpp"
#include "f2/subspace.hpp"

namespace f2 {

using json = nlohmann::ordered_json;

std::string mask_hex(std::uint32_t mask);
std::uint32_t mask_from_hex(const std::string& text);

std::string mpq_to_string(const mpq_class& q);  // "p/q", plain "p" for integers
mpq_class mpq_from_string(const std::string& text);

json subspace_to_json(const Subspace& v);
Subspace subspace_from_json(const json& j);

json report_to_json(const FinderReport& report);
FinderReport report_from_json(const json& j);

}  // namespace f2
