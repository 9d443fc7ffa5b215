#include "meridian/braids/braid.hpp"

#include <cstdlib>

#include "braids/braid_reader.hpp"
#include "meridian/error.hpp"
#include "text/scanner.hpp"

namespace meridian {

namespace {

void check_letters(int strands, std::span<const int> letters) {
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw InvalidArgument("braid letter " + std::to_string(l) +
                            " out of range for " + std::to_string(strands) +
                            " strands");
}

// Image of the single free generator g_i (sign s) under sigma_j^{+-1}.
void act_letter(int sigma, const Word& w, Word& out) {
  const int j = std::abs(sigma);
  std::vector<int> buf;
  buf.reserve(w.size() + 8);
  for (int l : w) {
    const int i = std::abs(l);
    int img[3];
    int len = 1;
    if (sigma > 0) {
      if (i == j) {
        img[0] = j + 1;
      } else if (i == j + 1) {
        img[0] = j + 1; img[1] = j; img[2] = -(j + 1); len = 3;
      } else {
        img[0] = i;
      }
    } else {
      if (i == j + 1) {
        img[0] = j;
      } else if (i == j) {
        img[0] = -j; img[1] = j + 1; img[2] = j; len = 3;
      } else {
        img[0] = i;
      }
    }
    if (l > 0) {
      for (int k = 0; k < len; ++k) buf.push_back(img[k]);
    } else {
      for (int k = len; k-- > 0;) buf.push_back(-img[k]);
    }
  }
  out = Word(buf);
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw InvalidArgument("a braid needs at least one strand");
}

BraidWord::BraidWord(int strands, std::span<const int> letters) : BraidWord(strands) {
  check_letters(strands, letters);
  letters_ = Word(letters);
}

BraidWord::BraidWord(int strands, std::initializer_list<int> letters)
    : BraidWord(strands, std::span<const int>(letters.begin(), letters.size())) {}

BraidWord BraidWord::generator(int strands, int j, long e) {
  const int l[] = {j};
  return BraidWord(strands, l).pow(e);
}

BraidWord BraidWord::inverse() const {
  BraidWord b(strands_);
  b.letters_ = letters_.inverse();
  return b;
}

BraidWord BraidWord::pow(long n) const {
  BraidWord b(strands_);
  b.letters_ = letters_.pow(n);
  return b;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (rhs.strands_ != strands_)
    throw InvalidArgument("braids on " + std::to_string(strands_) + " and " +
                          std::to_string(rhs.strands_) + " strands");
  letters_ *= rhs.letters_;
  return *this;
}

BraidWord braid_conjugate(const BraidWord& a, const BraidWord& b) {
  return a * b * a.inverse();
}

Word artin_action(const BraidWord& b, const Word& w) {
  if (w.max_generator() > b.strands())
    throw MalformedWord("word uses generator " + std::to_string(w.max_generator()) +
                        " but the braid has " + std::to_string(b.strands()) +
                        " strands");
  Word current = w;
  Word next;
  for (int sigma : b.letters()) {
    act_letter(sigma, current, next);
    std::swap(current, next);
  }
  return current;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw InvalidArgument("braid_equal: strand counts differ");
  for (int i = 1; i <= a.strands(); ++i) {
    const Word g = Word::generator(i);
    if (artin_action(a, g) != artin_action(b, g)) return false;
  }
  return true;
}

BraidWord parse_braid(std::string_view source, int strands) {
  text::Scanner sc(source);
  BraidWord b = detail::read_braid(sc, strands);
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  return b;
}

std::string format_braid(const BraidWord& b) {
  if (b.empty()) return "1";
  const auto& l = b.letters();
  std::string out;
  std::size_t i = 0;
  while (i < l.size()) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const long run = static_cast<long>(j - i) * (l[i] > 0 ? 1 : -1);
    if (!out.empty()) out += '*';
    out += "s" + std::to_string(std::abs(l[i]));
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

namespace detail {

namespace {

BraidWord read_factor(text::Scanner& sc, int strands);

BraidWord read_atom(text::Scanner& sc, int strands) {
  if (sc.at_punct('(')) {
    sc.next();
    BraidWord b = read_braid(sc, strands);
    sc.expect_punct(')');
    return b;
  }
  const text::Token& t = sc.peek();
  if (t.kind == text::TokenKind::integer && t.text == "1") {
    sc.next();
    return BraidWord(strands);
  }
  if (t.kind == text::TokenKind::identifier && t.text.size() > 1 && t.text[0] == 's') {
    const std::string digits = t.text.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos &&
        digits.size() < 6) {
      const int j = std::stoi(digits);
      if (j < 1 || j >= strands)
        sc.fail("Artin generator out of range for " + std::to_string(strands) +
                " strands");
      sc.next();
      return BraidWord::generator(strands, j);
    }
  }
  sc.fail("expected Artin generator s<k>, '1' or '('");
}

BraidWord read_factor(text::Scanner& sc, int strands) {
  BraidWord b = read_atom(sc, strands);
  if (sc.at_punct('^')) {
    sc.next();
    b = b.pow(sc.expect_signed_integer());
  }
  return b;
}

}  // namespace

BraidWord read_braid(text::Scanner& sc, int strands) {
  BraidWord b = read_factor(sc, strands);
  while (sc.at_punct('*')) {
    sc.next();
    b *= read_factor(sc, strands);
  }
  return b;
}

}  // namespace detail

}  // namespace meridian
