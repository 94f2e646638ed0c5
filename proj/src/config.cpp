#include "genus/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "genus/error.hpp"
#include "json.hpp"

namespace genus {

namespace {

using nlohmann::json;

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        return Int(j.get<long long>());
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::exception&) {
            throw ParseError(where + ": '" + s + "' is not an integer");
        }
    }
    throw ParseError(where + ": expected an integer or a decimal string, got " +
                     std::string(j.type_name()));
}

int sign_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw ParseError(where + ": expected +1 or -1, got " +
                         std::string(j.type_name()));
    }
    const long long v = j.get<long long>();
    if (v != 1 && v != -1) {
        throw ParseError(where + ": expected +1 or -1, got " + std::to_string(v));
    }
    return static_cast<int>(v);
}

SpaceConfig space_from_json(const json& j, std::size_t index) {
    const std::string slot = "space #" + std::to_string(index + 1);
    if (!j.is_object()) {
        throw ParseError(slot + ": expected an object, got " +
                         std::string(j.type_name()));
    }
    if (!j.contains("name") || !j.at("name").is_string()) {
        throw ParseError(slot + ": missing string field 'name'");
    }

    SpaceConfig config;
    config.name = j.at("name").get<std::string>();
    const std::string where = "space '" + config.name + "'";

    if (!j.contains("base")) {
        throw ParseError(where + ": missing field 'base'");
    }
    config.base = int_from_json(j.at("base"), where + ", field 'base'");

    if (j.contains("twist")) {
        config.twist = sign_from_json(j.at("twist"), where + ", field 'twist'");
    }

    if (j.contains("overrides")) {
        const json& ov = j.at("overrides");
        if (!ov.is_object()) {
            throw ParseError(where + ": 'overrides' must be an object keyed by "
                             "primes, got " + std::string(ov.type_name()));
        }
        for (const auto& item : ov.items()) {
            Int p;
            try {
                p = Int(item.key());
            } catch (const std::exception&) {
                throw ParseError(where + ": override key '" + item.key() +
                                 "' is not an integer");
            }
            config.overrides[p] = sign_from_json(
                item.value(), where + ", override at " + item.key());
        }
    }

    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (key != "name" && key != "base" && key != "twist" &&
            key != "overrides") {
            throw ParseError(where + ": unknown field '" + key + "'");
        }
    }
    return config;
}

}  // namespace

std::vector<SpaceConfig> parse_space_configs(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    json list;
    if (doc.is_array()) {
        list = doc;
    } else if (doc.is_object() && doc.contains("spaces")) {
        if (!doc.at("spaces").is_array()) {
            throw ParseError("'spaces' must be an array, got " +
                             std::string(doc.at("spaces").type_name()));
        }
        list = doc.at("spaces");
    } else if (doc.is_object()) {
        list = json::array({doc});
    } else {
        throw ParseError("expected an object or an array at top level, got " +
                         std::string(doc.type_name()));
    }

    std::vector<SpaceConfig> spaces;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
        SpaceConfig config = space_from_json(list[i], i);
        if (!seen.insert(config.name).second) {
            throw ParseError("duplicate space name '" + config.name + "'");
        }
        spaces.push_back(std::move(config));
    }
    return spaces;
}

std::vector<SpaceConfig> load_space_configs(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_space_configs(buffer.str());
}

GenusSpace to_genus_space(const SpaceConfig& config) {
    std::map<Prime, Sign> overrides;
    for (const auto& [p, s] : config.overrides) {
        try {
            overrides.emplace(Prime(p), Sign::of(s));
        } catch (const Error& e) {
            throw ParseError("space '" + config.name + "': " + e.what());
        }
    }
    try {
        return GenusSpace{
            make_invariant(config.base, Sign::of(config.twist), overrides),
            config.name};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError("space '" + config.name + "': " + e.what());
    }
}

const SpaceConfig& find_space(const std::vector<SpaceConfig>& spaces,
                              const std::string& name) {
    for (const auto& space : spaces) {
        if (space.name == name) {
            return space;
        }
    }
    std::string known;
    for (const auto& space : spaces) {
        if (!known.empty()) {
            known += ", ";
        }
        known += space.name;
    }
    if (known.empty()) {
        known = "(none)";
    }
    throw ParseError("no space named '" + name + "' in config; known: " + known);
}

}  // namespace genus
