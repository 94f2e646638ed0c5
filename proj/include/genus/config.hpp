#pragma once

#include <map>
#include <string>
#include <vector>

#include "genus/rector.hpp"

namespace genus {

// One space as it appears in a config document, before validation against
// the model. base/twist/overrides mirror the canonical-form fields; twist
// and override values are restricted to +1/-1 at parse time, primality of
// override keys is checked in to_genus_space.
struct SpaceConfig {
    std::string name;
    Int base = 1;
    int twist = 1;
    std::map<Int, int> overrides;
};

// Accepts any of:
//   {"spaces": [ {...}, ... ]}
//   [ {...}, ... ]
//   {...}                        (a single space object)
// Each space object carries "name" (string), "base" (integer or decimal
// string), optional "twist" (+1/-1, default +1) and optional "overrides"
// (object keyed by decimal prime strings with +1/-1 values).
// Throws ParseError naming the offending field; duplicate names are
// rejected.
std::vector<SpaceConfig> parse_space_configs(const std::string& text);

// parse_space_configs over the contents of a file. Throws ParseError if the
// file cannot be read.
std::vector<SpaceConfig> load_space_configs(const std::string& path);

// Validates the raw config into the model. Model-level failures (composite
// override key, base 0, missing coverage of a prime dividing the base) are
// rethrown as ParseError prefixed with the space name.
GenusSpace to_genus_space(const SpaceConfig& config);

// Looks up a space by name. Throws ParseError listing the known names when
// absent.
const SpaceConfig& find_space(const std::vector<SpaceConfig>& spaces,
                              const std::string& name);

}  // namespace genus
