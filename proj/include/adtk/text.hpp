#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adtk {

// Shortest decimal form that parses back to the same double. Used everywhere
// a double is written to a file so that round-trips are exact and output
// bytes are stable.
std::string format_double(double v);

// Strict full-token parse; std::nullopt if the token is not a valid double.
std::optional<double> parse_double(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, char sep);
std::string_view trim(std::string_view s);

}  // namespace adtk
