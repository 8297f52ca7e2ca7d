#include "epit/lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace epit {

namespace {

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_hex_digit(unsigned char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

// Expected byte length of a UTF-8 sequence from its lead byte; 0 for an
// invalid lead.
int utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 0;
}

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Multi-character operators/separators, longest first for maximal munch.
constexpr std::array<std::string_view, 22> kMultiCharOps = {
    ">>>=", ">>>", "<<=", ">>=", "...", "==", "!=", "<=", ">=", "&&", "||",
    "++",   "--",  "+=",  "-=",  "*=",  "/=", "&=", "|=", "^=", "%=", "->",
};
// "<<" and ">>" are intentionally after the 3-char forms above.
constexpr std::array<std::string_view, 3> kMultiCharOps2 = {"<<", ">>", "::"};

bool is_punctuation_lexeme(std::string_view s) {
  if (s == "..." || s == "::") return true;
  if (s.size() != 1) return false;
  switch (s[0]) {
    case '(': case ')': case '{': case '}': case '[': case ']':
    case ';': case ',': case '.': case '@':
      return true;
    default:
      return false;
  }
}

const std::unordered_set<std::string_view> kKeywords = {
    "abstract", "assert",   "boolean",    "break",      "byte",    "case",
    "catch",    "char",     "class",      "const",      "continue", "default",
    "do",       "double",   "else",       "enum",       "extends", "final",
    "finally",  "float",    "for",        "goto",       "if",      "implements",
    "import",   "instanceof", "int",      "interface",  "long",    "native",
    "new",      "package",  "private",    "protected",  "public",  "return",
    "short",    "static",   "strictfp",   "super",      "switch",
    "synchronized", "this", "throw",      "throws",     "transient", "try",
    "void",     "volatile", "while",
    // literal words; lexed as keywords so type-2 normalization keeps them
    "true", "false", "null",
};

const std::unordered_set<std::string_view> kPrimitives = {
    "boolean", "byte", "char", "short", "int",
    "long",    "float", "double", "void",
};

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  LexResult run() {
    while (pos_ < src_.size()) {
      lex_one();
    }
    emit(TokenKind::EndOfInput, pos_);
    return {std::move(tokens_), std::move(errors_)};
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::vector<Token> tokens_;
  DiagnosticList errors_;

  unsigned char at(std::size_t i) const {
    return i < src_.size() ? static_cast<unsigned char>(src_[i]) : 0;
  }
  unsigned char cur() const { return at(pos_); }
  unsigned char next() const { return at(pos_ + 1); }

  // Emits src_[start, pos_) as one token and advances line/column over it.
  void emit(TokenKind kind, std::size_t start) {
    Token t;
    t.kind = kind;
    t.lexeme.assign(src_.substr(start, pos_ - start));
    t.line = line_;
    t.column = column_;
    for (char c : t.lexeme) {
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
    tokens_.push_back(std::move(t));
  }

  void error(std::string message) {
    errors_.push_back(
        {DiagnosticKind::LexicalError, line_, column_, std::move(message)});
  }

  void lex_one() {
    const unsigned char c = cur();
    if (is_space(c)) {
      lex_whitespace();
    } else if (c == '/' && next() == '/') {
      lex_line_comment();
    } else if (c == '/' && next() == '*') {
      lex_block_comment();
    } else if (c == '"') {
      lex_string('"', "unterminated string literal");
    } else if (c == '\'') {
      lex_string('\'', "unterminated char literal");
    } else if (is_digit(c) || (c == '.' && is_digit(next()))) {
      lex_number();
    } else if (c < 0x80 && is_ident_start(c)) {
      lex_word();
    } else if (c >= 0x80) {
      lex_utf8();
    } else {
      lex_operator();
    }
  }

  void lex_whitespace() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_space(cur())) ++pos_;
    emit(TokenKind::Whitespace, start);
  }

  void lex_line_comment() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && cur() != '\n') ++pos_;
    emit(TokenKind::Comment, start);
  }

  void lex_block_comment() {
    std::size_t start = pos_;
    pos_ += 2;
    while (pos_ < src_.size()) {
      if (cur() == '*' && next() == '/') {
        pos_ += 2;
        emit(TokenKind::Comment, start);
        return;
      }
      ++pos_;
    }
    error("unterminated block comment");
    emit(TokenKind::Comment, start);
  }

  // Strings and chars share the shape; neither may span a line break.
  void lex_string(char quote, const char* unterminated_message) {
    std::size_t start = pos_;
    ++pos_;
    bool closed = false;
    while (pos_ < src_.size()) {
      unsigned char c = cur();
      if (c == '\n') break;
      if (c == '\\' && pos_ + 1 < src_.size() && next() != '\n') {
        pos_ += 2;
        continue;
      }
      ++pos_;
      if (c == static_cast<unsigned char>(quote)) {
        closed = true;
        break;
      }
    }
    if (!closed) error(unterminated_message);
    emit(quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral,
         start);
  }

  void lex_number() {
    std::size_t start = pos_;
    bool is_float = false;

    if (cur() == '0' && (next() == 'x' || next() == 'X')) {
      pos_ += 2;
      while (pos_ < src_.size() && (is_hex_digit(cur()) || cur() == '_'))
        ++pos_;
    } else if (cur() == '0' && (next() == 'b' || next() == 'B')) {
      pos_ += 2;
      while (pos_ < src_.size() &&
             (cur() == '0' || cur() == '1' || cur() == '_'))
        ++pos_;
    } else {
      if (cur() == '.') {
        is_float = true;
        ++pos_;
      }
      while (pos_ < src_.size() && (is_digit(cur()) || cur() == '_')) ++pos_;
      if (!is_float && cur() == '.' && is_digit(next())) {
        is_float = true;
        ++pos_;
        while (pos_ < src_.size() && (is_digit(cur()) || cur() == '_')) ++pos_;
      }
      if (cur() == 'e' || cur() == 'E') {
        std::size_t mark = pos_ + 1;
        if (at(mark) == '+' || at(mark) == '-') ++mark;
        if (is_digit(at(mark))) {
          is_float = true;
          pos_ = mark;
          while (pos_ < src_.size() && is_digit(cur())) ++pos_;
        }
      }
    }

    unsigned char suffix = cur();
    if (suffix == 'l' || suffix == 'L') {
      ++pos_;
    } else if (suffix == 'f' || suffix == 'F' || suffix == 'd' ||
               suffix == 'D') {
      is_float = true;
      ++pos_;
    }
    emit(is_float ? TokenKind::FloatLiteral : TokenKind::IntegerLiteral,
         start);
  }

  void lex_word() {
    std::size_t start = pos_;
    while (pos_ < src_.size()) {
      unsigned char c = cur();
      if (c < 0x80) {
        if (!is_ident_part(c)) break;
        ++pos_;
      } else {
        int len = utf8_sequence_at(pos_);
        if (len == 0) break;  // invalid bytes start their own token
        pos_ += static_cast<std::size_t>(len);
      }
    }
    std::string_view word = src_.substr(start, pos_ - start);
    emit(kKeywords.contains(word) ? TokenKind::Keyword : TokenKind::Identifier,
         start);
  }

  // Non-ASCII outside literals: valid sequences join identifiers, invalid
  // bytes become single-byte punctuation with a diagnostic.
  void lex_utf8() {
    int len = utf8_sequence_at(pos_);
    if (len == 0) {
      error("invalid UTF-8 byte");
      ++pos_;
      emit(TokenKind::Punctuation, pos_ - 1);
      return;
    }
    lex_word();
  }

  // Length of a complete valid UTF-8 sequence at `i`, or 0.
  int utf8_sequence_at(std::size_t i) const {
    int len = utf8_length(at(i));
    for (int k = 1; k < len; ++k) {
      if (i + static_cast<std::size_t>(k) >= src_.size() ||
          !is_continuation(at(i + static_cast<std::size_t>(k))))
        return 0;
    }
    return len;
  }

  void lex_operator() {
    std::size_t start = pos_;
    std::string_view rest = src_.substr(pos_);
    for (std::string_view op : kMultiCharOps) {
      if (rest.starts_with(op)) {
        pos_ += op.size();
        emit(op == "..." ? TokenKind::Punctuation : TokenKind::Operator,
             start);
        return;
      }
    }
    for (std::string_view op : kMultiCharOps2) {
      if (rest.starts_with(op)) {
        pos_ += op.size();
        emit(op == "::" ? TokenKind::Punctuation : TokenKind::Operator, start);
        return;
      }
    }
    ++pos_;
    std::string_view single = src_.substr(start, 1);
    // Anything unexpected (e.g. '#' or a stray backslash) is passed through
    // as punctuation and left for the parser to reject.
    const bool op_char =
        std::string_view("=><!~?:+-*/&|^%").find(single[0]) !=
        std::string_view::npos;
    emit(!op_char || is_punctuation_lexeme(single) ? TokenKind::Punctuation
                                                   : TokenKind::Operator,
         start);
  }
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntegerLiteral: return "integer-literal";
    case TokenKind::FloatLiteral: return "float-literal";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::CharLiteral: return "char-literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Comment: return "comment";
    case TokenKind::Whitespace: return "whitespace";
    case TokenKind::EndOfInput: return "end-of-input";
  }
  return "unknown";
}

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

std::string reconstruct_source(std::span<const Token> tokens) {
  std::string out;
  std::size_t total = 0;
  for (const Token& t : tokens) total += t.lexeme.size();
  out.reserve(total);
  for (const Token& t : tokens) out += t.lexeme;
  return out;
}

bool is_java_keyword(std::string_view word) { return kKeywords.contains(word); }

bool is_primitive_type_name(std::string_view word) {
  return kPrimitives.contains(word);
}

std::string format_diagnostic(const Diagnostic& d,
                              const std::string& file_path) {
  std::string out = file_path;
  out += ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": ";
  out += d.kind == DiagnosticKind::LexicalError ? "lexical error: "
                                                : "syntax error: ";
  out += d.message;
  return out;
}

}  // namespace epit
