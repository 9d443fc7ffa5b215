#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "meridian/fpgroups/presentation.hpp"

namespace meridian {

/// Non-fatal findings while reading a presentation.
struct ParseDiagnostics {
  std::size_t dropped_empty = 0;
  std::size_t dropped_duplicate = 0;
  std::vector<std::string> warnings;
};

/// Reads the presentation grammar:
///
///   file      := stmt*
///   stmt      := "gens" ident+ ";" | "rel" relation ";"
///   relation  := word | word "=" word          (stored as w1 * w2^-1)
///   word      := factor ("*" factor)*
///   factor    := atom ("^" integer)?
///   atom      := ident | "(" word ")" | "[" word "," word "]" | "1"
///   comments  := "#" to end of line
///
/// [a,b] expands to a b a^-1 b^-1. Relators reducing to the identity and
/// repeated relators are dropped and counted in `diagnostics`.
Presentation parse_presentation(std::string_view text,
                                ParseDiagnostics* diagnostics = nullptr);

/// Reads a single word over the generators of `names`.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

/// Canonical text: one "gens" line, one "rel w;" line per relator, letters
/// joined by '*' with inverses written x^-1.
std::string format_presentation(const Presentation& p);

/// Word as letters joined by '*', "1" for the identity.
std::string format_word(const Word& w, const std::vector<std::string>& names);

/// Same as format_word but collapses runs into powers (x^3*y^-2).
std::string format_word_compact(const Word& w, const std::vector<std::string>& names);

}  // namespace meridian
