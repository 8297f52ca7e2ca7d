#pragma once

#include <string>
#include <string_view>

namespace epit {

enum class TokenKind {
  Keyword,
  Identifier,
  IntegerLiteral,
  FloatLiteral,
  StringLiteral,
  CharLiteral,
  Operator,
  Punctuation,
  Comment,
  Whitespace,
  EndOfInput,
};

std::string_view token_kind_name(TokenKind kind);

// One lexical unit, trivia included. Concatenating the lexemes of a full
// token stream reproduces the input byte-for-byte.
struct Token {
  TokenKind kind = TokenKind::EndOfInput;
  std::string lexeme;
  int line = 1;    // 1-based, of the first byte
  int column = 1;  // 1-based byte column

  bool is_trivia() const {
    return kind == TokenKind::Comment || kind == TokenKind::Whitespace;
  }
  bool is(TokenKind k) const { return kind == k; }
  bool is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }

  friend bool operator==(const Token&, const Token&) = default;
};

}  // namespace epit
