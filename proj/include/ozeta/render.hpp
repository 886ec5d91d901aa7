#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "ozeta/poly.hpp"

namespace ozeta {

enum class Format { Text, Latex, Json };

std::optional<Format> parse_format(const std::string& s);

/* JSON integer encoding: a plain JSON number when it fits in 64 bits, else a
 * decimal string — see schema/runreport.v1.json. */
nlohmann::json json_int(const mpz_class& v);

nlohmann::json to_json(const QPoly& p);           // ascending powers of q
nlohmann::json to_json(const XPoly& p);           // ascending powers of X
nlohmann::json to_json(const CoeffSeries& s);     // a_0 .. a_order
nlohmann::json to_json(const std::vector<mpz_class>& v);

std::string series_text(const CoeffSeries& s);          // "[1, 1, q + 1]"
std::string ints_text(const std::vector<mpz_class>& v); // "[1, 1, 4]"

}  // namespace ozeta
