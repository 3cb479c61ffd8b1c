#include "qtf/fixtures.hpp"
#include "qtf/errors.hpp"

#include <map>
#include <utility>

namespace qtf {

// Generated at configure time.
extern const std::vector<std::pair<const char*, const char*>>& embedded_fixtures();

namespace {

const std::map<std::string, json>& registry() {
    static const std::map<std::string, json> reg = [] {
        std::map<std::string, json> m;
        for (auto& [name, text] : embedded_fixtures()) m.emplace(name, json::parse(text));
        return m;
    }();
    return reg;
}

} // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (auto& [k, v] : registry()) out.push_back(k);
    return out;
}

std::vector<std::string> bank_fixture_names() {
    std::vector<std::string> out;
    for (auto& [k, v] : registry())
        if (v.contains("highpass")) out.push_back(k);
    return out;
}

const json& fixture_json(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error(Errc::InvalidArgument, "unknown fixture '" + name + "'");
    return it->second;
}

QtfBank load_fixture(const std::string& name) { return bank_from_json(fixture_json(name)); }

json load_input(const std::string& spec) {
    const std::string prefix = "fixture:";
    if (spec.rfind(prefix, 0) == 0) return fixture_json(spec.substr(prefix.size()));
    return read_json_file(spec);
}

} // namespace qtf
