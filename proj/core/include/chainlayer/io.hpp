#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "chainlayer/model.hpp"
#include "chainlayer/scenario.hpp"

namespace chainlayer {

// Chain and scenario documents are JSON with money values written as
// decimal strings ("12.00"); non-negative integers are also accepted,
// binary floating point never is. Malformed documents raise ParseError
// with the position (line/column for syntax, field path otherwise);
// structural problems raise the matching graph error.

SupplyChainGraph parse_chain(const std::string& text, std::string_view origin = "<input>");
SupplyChainGraph load_chain(const std::filesystem::path& path);

Scenario parse_scenario(const std::string& text, std::string_view origin = "<input>");
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace chainlayer
