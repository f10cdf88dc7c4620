#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace tnes {

// Locale-independent parse of a whole field ('.' decimal point, surrounding
// blanks allowed). Empty on anything else.
std::optional<double> parse_double(std::string_view field);

// Splits on commas; no quoting.
std::vector<std::string_view> split_fields(std::string_view line);

// First column of a CSV of observations. A non-numeric first line is taken as
// a header; blank lines are skipped. Throws DomainError("line N: ...").
std::vector<double> read_value_column(std::istream& is);

}  // namespace tnes
