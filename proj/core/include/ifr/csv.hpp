#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ifr::csv {

/// Splits one record (no line terminator) on commas, honouring RFC 4180
/// double quotes. Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> split_record(std::string_view line);

/// Quotes a field only when it contains a comma, quote, or line break.
std::string escape_field(std::string_view field);

std::string join_record(const std::vector<std::string>& fields);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

}  // namespace ifr::csv
