#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epit/diagnostics.hpp"
#include "epit/token.hpp"

namespace epit {

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an EndOfInput token
  DiagnosticList errors;
};

// Splits `source` into tokens, keeping comments and whitespace as trivia
// tokens so the stream stays lossless. Lexical errors (unterminated string,
// char or block comment, invalid UTF-8) are recorded and lexing continues;
// the offending bytes still end up in some token so reconstruction holds
// even for broken input.
LexResult tokenize(std::string_view source);

// Inverse of tokenize: concatenates the lexemes back into the original text.
std::string reconstruct_source(std::span<const Token> tokens);

bool is_java_keyword(std::string_view word);
bool is_primitive_type_name(std::string_view word);

}  // namespace epit
