#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meridian/fpgroups/word.hpp"

namespace meridian {

/// Braid on `strands` strands as a freely reduced word in the Artin
/// generators: letter j > 0 is sigma_j, -j its inverse, 1 <= j < strands.
/// No braid-group normal form is applied; use braid_equal for equality.
class BraidWord {
 public:
  explicit BraidWord(int strands = 1);
  /// Throws InvalidArgument when a letter is 0 or exceeds strands - 1.
  BraidWord(int strands, std::span<const int> letters);
  BraidWord(int strands, std::initializer_list<int> letters);

  /// sigma_j^e
  static BraidWord generator(int strands, int j, long e = 1);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_.letters(); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(long n) const;

  /// Concatenation; throws InvalidArgument on a strand mismatch.
  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }

  /// Letter-for-letter equality of the reduced words.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  Word letters_;  // reuses free reduction of signed indices
};

/// a b a^-1
BraidWord braid_conjugate(const BraidWord& a, const BraidWord& b);

/// Image of w under the right action of b on the free group F_n:
///   g_i^{sigma_j} = g_{i+1}            if i = j
///                 = g_{i+1} g_i g_{i+1}^-1  if i = j + 1
///                 = g_i                otherwise,
/// applied letter by letter from the left end of b, so the action of b1*b2
/// is that of b1 followed by that of b2. Throws MalformedWord when w uses a
/// generator beyond b.strands().
Word artin_action(const BraidWord& b, const Word& w);

/// True iff both braids act identically on g_1..g_n (the Artin
/// representation is faithful). Throws InvalidArgument on strand mismatch.
bool braid_equal(const BraidWord& a, const BraidWord& b);

/// Braid word grammar: factor ("*" factor)*, factor := atom ("^" int)?,
/// atom := "s<k>" | "1" | "(" word ")".
BraidWord parse_braid(std::string_view text, int strands);

/// Compact form such as "s2^2*s1^-1*s2", "1" for the trivial braid.
std::string format_braid(const BraidWord& b);

}  // namespace meridian
