#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "acm5/coframe.hpp"

namespace acm5::cli {

using Json = nlohmann::ordered_json;

/// Reads the JSON coframe format. Parse errors carry line and column;
/// structural problems raise Schema.
CoframeData parse_coframe(std::string_view text);
CoframeData load_coframe(const std::string& path);

Json coframe_to_json(const CoframeData& c);
std::string dump(const Json& j);

}  // namespace acm5::cli
