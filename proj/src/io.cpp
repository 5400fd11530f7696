#include "dirset/io.hpp"

#include <charconv>

#include "dirset/error.hpp"

namespace dirset {

std::vector<Element> parse_index_list(std::string_view text, std::uint32_t q) {
  std::vector<Element> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t lo = pos;
    std::size_t hi = end;
    while (lo < hi && text[lo] == ' ') ++lo;
    while (hi > lo && text[hi - 1] == ' ') --hi;
    const auto token = text.substr(lo, hi - lo);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::ParseError,
                  "position " + std::to_string(lo) + ": expected a canonical index, got '" + std::string(token) + "'");
    if (v >= q)
      throw Error(ErrorCode::ParseError, "position " + std::to_string(lo) + ": index " + std::to_string(v) +
                                             " is not below q = " + std::to_string(q));
    out.push_back(static_cast<Element>(v));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string format_index_list(const std::vector<Element>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

FqFunction parse_function(const FieldPtr& field, std::string_view text, bool as_table) {
  auto values = parse_index_list(text, field->q());
  if (as_table) {
    if (values.size() != field->q())
      throw Error(ErrorCode::LengthMismatch, "value table has " + std::to_string(values.size()) +
                                                 " entries, expected " + std::to_string(field->q()));
    return FqFunction::from_table(field, std::move(values));
  }
  return FqFunction::from_coefficients(field, values);
}

}  // namespace dirset
