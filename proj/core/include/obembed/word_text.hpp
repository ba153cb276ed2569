#pragma once

// Text form of twist words: whitespace separated letters
//   T{1,2}^3    twist along the curve enclosing holes 1 and 2, exponent 3
//   T{1}^-1
//   P{4|1,2}    push hole 4 around the curve enclosing 1 and 2
// The exponent defaults to 1. '#' starts a comment.

#include <string>
#include <string_view>

#include "obembed/planar_mcg.hpp"

namespace obembed {

std::string format_letter(const Letter& letter);
std::string format_word(const TwistWord& word);

// Throws InvalidInput for syntax errors and InvalidWord for letters that do
// not fit the page.
TwistWord parse_word(std::string_view text, const PlanarPage& page);

}  // namespace obembed
