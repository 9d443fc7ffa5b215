#pragma once

#include "meridian/braids/braid.hpp"
#include "text/scanner.hpp"

namespace meridian::detail {

BraidWord read_braid(text::Scanner& sc, int strands);

}  // namespace meridian::detail
