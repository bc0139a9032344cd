#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dlga/group.hpp"

namespace dlga {

// t1[i,b] or t2[i,j,b] with 1-based indices, optional trailing ' for the
// inverse. Throws ParseError.
Generator parse_generator(std::string_view text, const GroupParams& params);
// Comma-separated generator literals; blank text is the empty word.
Word parse_word(std::string_view text, const GroupParams& params);
std::string to_string(const Word& word);

// Sum of terms c*(t+l<i>)^<e> and c*t^<k>, whitespace-insensitive.
RationalForm parse_polynomial(std::string_view text, const PolyRing& ring);

// Comma-separated integers.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace dlga
