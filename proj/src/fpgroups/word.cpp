#include "meridian/fpgroups/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "meridian/error.hpp"

namespace meridian {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

Word::Word(std::span<const int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) throw MalformedWord("word letter 0 is not a generator index");
    push_reduced(letters_, l);
  }
}

Word::Word(std::initializer_list<int> letters)
    : Word(std::span<const int>(letters.begin(), letters.size())) {}

Word Word::generator(int index) {
  const int l[] = {index};
  return Word(l);
}

int Word::max_generator() const noexcept {
  int m = 0;
  for (int l : letters_) m = std::max(m, std::abs(l));
  return m;
}

std::size_t Word::occurrences(int k) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(), [k](int l) { return std::abs(l) == k; }));
}

long Word::exponent_sum(int k) const noexcept {
  long s = 0;
  for (int l : letters_) {
    if (l == k) ++s;
    if (l == -k) --s;
  }
  return s;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

Word Word::pow(long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word result;
  for (long i = 0; i < std::labs(n); ++i) result *= base;
  return result;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<long>(lo),
                    letters_.begin() + static_cast<long>(hi));
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  for (int l : rhs.letters_) push_reduced(letters_, l);
  return *this;
}

Word reduce_word(std::span<const int> letters) { return Word(letters); }

Word conjugate(const Word& a, const Word& b) { return a * b * a.inverse(); }

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

Word cyclic_canonical(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (const Word& base : {w, w.inverse()}) {
    const auto& l = base.letters();
    std::vector<int> rot(l.size());
    for (std::size_t s = 0; s < l.size(); ++s) {
      std::rotate_copy(l.begin(), l.begin() + static_cast<long>(s), l.end(),
                       rot.begin());
      Word candidate(rot);
      if (candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (int l : w) {
    const auto k = static_cast<std::size_t>(std::abs(l));
    if (k > images.size())
      throw MalformedWord("substitution has no image for generator " +
                          std::to_string(k));
    out *= l > 0 ? images[k - 1] : images[k - 1].inverse();
  }
  return out;
}

}  // namespace meridian
