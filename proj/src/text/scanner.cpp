#include "text/scanner.hpp"

#include <cctype>
#include <limits>

#include "meridian/error.hpp"

namespace meridian::text {

namespace {

bool ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

}  // namespace

Scanner::Scanner(std::string_view source) : src_(source) { current_ = scan(); }

Token Scanner::next() {
  Token t = current_;
  current_ = scan();
  return t;
}

bool Scanner::at_punct(char c) const noexcept {
  return current_.kind == TokenKind::punct && current_.text[0] == c;
}

bool Scanner::at_identifier(std::string_view word) const noexcept {
  return current_.kind == TokenKind::identifier && current_.text == word;
}

void Scanner::expect_punct(char c) {
  if (!at_punct(c)) fail(std::string("expected '") + c + "'");
  next();
}

std::string Scanner::expect_identifier() {
  if (current_.kind != TokenKind::identifier) fail("expected identifier");
  return next().text;
}

long Scanner::expect_integer() {
  if (current_.kind != TokenKind::integer) fail("expected integer");
  const Token t = next();
  if (t.text.size() > 15) fail_at(t, "integer too large");
  return std::stol(t.text);
}

long Scanner::expect_signed_integer() {
  if (at_punct('-')) {
    next();
    return -expect_integer();
  }
  return expect_integer();
}

void Scanner::fail(const std::string& message) const { fail_at(current_, message); }

void Scanner::fail_at(const Token& token, const std::string& message) const {
  std::string found = token.kind == TokenKind::end ? "end of input"
                                                   : "'" + token.text + "'";
  throw ParseError(message + ", found " + found, token.line, token.column);
}

Token Scanner::scan() {
  // whitespace and comments
  while (pos_ < src_.size()) {
    const char c = src_[pos_];
    if (c == '\n') {
      ++pos_;
      ++line_;
      col_ = 1;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
      ++col_;
    } else if (c == '#') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
    } else {
      break;
    }
  }
  Token t;
  t.line = line_;
  t.column = col_;
  if (pos_ >= src_.size()) return t;

  const auto c = static_cast<unsigned char>(src_[pos_]);
  std::size_t start = pos_;
  if (ident_start(c)) {
    while (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    t.kind = TokenKind::identifier;
  } else if (std::isdigit(c)) {
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    t.kind = TokenKind::integer;
  } else {
    ++pos_;
    t.kind = TokenKind::punct;
  }
  t.text = std::string(src_.substr(start, pos_ - start));
  col_ += pos_ - start;
  return t;
}

}  // namespace meridian::text
