#pragma once

#include <string>
#include <vector>

#include "meridian/fpgroups/word.hpp"
#include "text/scanner.hpp"

namespace meridian::detail {

/// Reads a word of the presentation grammar starting at the current token.
Word read_word(text::Scanner& sc, const std::vector<std::string>& names);

}  // namespace meridian::detail
