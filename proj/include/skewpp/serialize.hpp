#pragma once

#include <string>

#include "json.hpp"
#include "skewpp/counting.hpp"

namespace skewpp {

// Counts travel as decimal strings in JSON and CSV so consumers never round
// them through floating point.

nlohmann::ordered_json to_json(const CountTable& table);
// Throws InputError when the document does not describe a valid table.
CountTable table_from_json(const nlohmann::ordered_json& doc);

nlohmann::ordered_json to_json(const VerifyReport& report);
nlohmann::ordered_json to_json(const Lemma1Report& report);
nlohmann::ordered_json to_json(const ModelsReport& report);

// RFC-4180 style: quotes a field only when it contains a comma, quote or
// newline.
std::string csv_field(const std::string& field);

// Header "n,k,side,j,l,count", one row per stored entry.
std::string to_csv(const CountTable& table);
// Header "n,k,m,lhs,rhs,match", one row per evaluated identity instance.
std::string to_csv(const VerifyReport& report);

} // namespace skewpp
