#include "tnes/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <string>

#include "tnes/errors.hpp"

namespace tnes {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool blank(std::string_view s) { return trim(s).empty(); }

}  // namespace

std::optional<double> parse_double(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<double> read_value_column(std::istream& is) {
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(is, line)) {
    ++lineno;
    if (blank(line)) continue;
    const std::string_view field = split_fields(line).front();
    const std::optional<double> v = parse_double(field);
    if (!v) {
      if (first) {
        first = false;
        continue;
      }
      throw DomainError("line " + std::to_string(lineno) + ": not a number: '" +
                        std::string(trim(field)) + "'");
    }
    if (!std::isfinite(*v)) {
      throw DomainError("line " + std::to_string(lineno) + ": value is not finite");
    }
    first = false;
    values.push_back(*v);
  }
  return values;
}

}  // namespace tnes
