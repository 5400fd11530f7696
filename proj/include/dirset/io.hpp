#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dirset/field.hpp"
#include "dirset/poly_fn.hpp"

namespace dirset {

// "3,0,1" -> {3, 0, 1}. Every entry must be a canonical index below q.
// Throws ParseError naming the character offset of the first bad entry.
std::vector<Element> parse_index_list(std::string_view text, std::uint32_t q);

std::string format_index_list(const std::vector<Element>& values);

// Coefficient list (constant term first) or, with as_table, a full value table.
FqFunction parse_function(const FieldPtr& field, std::string_view text, bool as_table);

}  // namespace dirset
