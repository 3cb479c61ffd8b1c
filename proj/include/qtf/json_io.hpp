#pragma once

#include "qtf/filterbank.hpp"

#include <json.hpp>

#include <string>

namespace qtf {

using json = nlohmann::json;

// Schema violations throw SchemaError with a JSON pointer in the message.
Laurent laurent_from_json(const json& j, const std::string& path = "");
json to_json(const Laurent& u);

IntMatrix int_matrix_from_json(const json& j, const std::string& path = "");
json to_json(const IntMatrix& m);

// "highpass" may be absent, which gives a low-pass-only document.
QtfBank bank_from_json(const json& j);
json to_json(const QtfBank& b);

LaurentMatrix laurent_matrix_from_json(const json& j, const std::string& path = "");
json to_json(const LaurentMatrix& m);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace qtf
