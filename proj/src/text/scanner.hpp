#pragma once

// Tokenizer shared by the presentation, monodromy and subgroup-spec formats.

#include <cstddef>
#include <string>
#include <string_view>

namespace meridian::text {

enum class TokenKind { identifier, integer, punct, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Scanner {
 public:
  explicit Scanner(std::string_view source);

  const Token& peek() const noexcept { return current_; }
  Token next();

  bool at_punct(char c) const noexcept;
  bool at_identifier(std::string_view word) const noexcept;
  bool at_end() const noexcept { return current_.kind == TokenKind::end; }

  /// Consumes the punctuation or throws ParseError.
  void expect_punct(char c);
  std::string expect_identifier();
  long expect_integer();
  /// Optional leading '-' followed by an integer.
  long expect_signed_integer();

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& token, const std::string& message) const;

 private:
  Token scan();

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token current_;
};

}  // namespace meridian::text
