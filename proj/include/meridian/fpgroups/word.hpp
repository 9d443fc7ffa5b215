#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace meridian {

/// Element of a free group as a freely reduced sequence of signed generator
/// indices: letter k > 0 stands for g_k and -k for its inverse. The empty
/// word is the identity.
class Word {
 public:
  Word() = default;
  /// Reduces the given letters; throws MalformedWord on a zero letter.
  explicit Word(std::span<const int> letters);
  Word(std::initializer_list<int> letters);

  static Word generator(int index);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Largest |letter|, 0 for the identity.
  int max_generator() const noexcept;
  /// Number of occurrences of g_k or its inverse.
  std::size_t occurrences(int k) const noexcept;
  /// Sum of the signs of the occurrences of g_k.
  long exponent_sum(int k) const noexcept;

  Word inverse() const;
  Word pow(long n) const;
  /// Strips letters cancelling across the ends: the result is a conjugate of
  /// *this that is both freely and cyclically reduced.
  Word cyclically_reduced() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
};

/// Free reduction of a raw signed-index sequence.
Word reduce_word(std::span<const int> letters);

/// a b a^-1
Word conjugate(const Word& a, const Word& b);

/// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

/// Smallest word (shortlex) among all cyclic permutations of w and of w^-1;
/// w must be cyclically reduced. Two relators define the same normal closure
/// generator up to conjugation and inversion iff their canonical forms agree.
Word cyclic_canonical(const Word& w);

/// Replaces every occurrence of g_k (k = 1..images.size()) by images[k-1].
Word substitute(const Word& w, std::span<const Word> images);

}  // namespace meridian
