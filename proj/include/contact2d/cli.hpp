#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contact2d/config.hpp"
#include "contact2d/table.hpp"

namespace contact2d {

// Compute the result table for a fully parsed configuration.
Table run_subcommand(const RunConfig& cfg);

// parse_config + run_subcommand + render, honoring the configured format.
std::string run_to_string(const std::string& subcommand, const std::string& config_text,
                          const std::vector<std::pair<std::string, std::string>>& overrides);

// Exit codes: 0 ok, 2 config/domain error, 3 solver failure, 4 i/o failure.
int cli_main(int argc, char** argv);

}  // namespace contact2d
