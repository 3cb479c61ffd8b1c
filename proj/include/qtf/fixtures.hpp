#pragma once

#include "qtf/filterbank.hpp"
#include "qtf/json_io.hpp"

#include <string>
#include <vector>

namespace qtf {

// Fixture documents are compiled into the library from fixtures/*.json.
std::vector<std::string> fixture_names();
// Fixtures that carry high-pass filters.
std::vector<std::string> bank_fixture_names();
const json& fixture_json(const std::string& name);
QtfBank load_fixture(const std::string& name);

// "fixture:<name>" or a file path.
json load_input(const std::string& spec);

} // namespace qtf
