#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace contact2d {

struct KeySpec {
    enum class Kind { real, integer, boolean, choice, text };
    Kind kind = Kind::real;
    std::string default_value;
    std::vector<std::string> choices;  // for Kind::choice
    std::string help;
};

// Ordered: iteration order is the documented key order.
using KeyRegistry = std::vector<std::pair<std::string, KeySpec>>;

const std::vector<std::string>& subcommand_names();
const KeyRegistry& key_registry(const std::string& subcommand);

struct RunConfig {
    std::string subcommand;
    std::map<std::string, std::string> values;  // validated raw text, defaults filled

    double real(const std::string& key) const;
    std::int64_t integer(const std::string& key) const;
    bool boolean(const std::string& key) const;
    const std::string& text(const std::string& key) const;
};

// "key = value" lines, '#' comments; overrides win over file values. Unknown keys
// and unparsable values are reported with their source (line number or flag name).
RunConfig parse_config(const std::string& subcommand, const std::string& file_text,
                       const std::vector<std::pair<std::string, std::string>>& overrides);

}  // namespace contact2d
