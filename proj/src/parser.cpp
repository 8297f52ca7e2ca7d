#include "epit/parser.hpp"

#include <algorithm>
#include <optional>

#include "epit/extractor.hpp"

namespace epit {

namespace {

const char* kModifierWords[] = {
    "public",    "protected", "private",   "static",   "final",
    "abstract",  "native",    "synchronized", "transient", "volatile",
    "strictfp",  "default",
};

bool is_modifier(const Token& t) {
  if (t.kind != TokenKind::Keyword) return false;
  return std::any_of(std::begin(kModifierWords), std::end(kModifierWords),
                     [&](const char* w) { return t.lexeme == w; });
}

// How many '>' characters a token contributes when balancing generics.
int closing_angle_count(const Token& t) {
  if (t.kind != TokenKind::Operator) return 0;
  if (t.lexeme == ">") return 1;
  if (t.lexeme == ">>") return 2;
  if (t.lexeme == ">>>") return 3;
  return 0;
}

// Recursive-descent parser over the significant (non-trivia) tokens of one
// compilation unit. Bodies are captured as raw token slices; statements are
// never analyzed. On a syntax error the parser records a diagnostic and
// skips ahead, so one bad member does not take the rest of the file down.
class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::string file_path)
      : raw_(tokens), file_path_(std::move(file_path)) {
    sig_.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!tokens[i].is_trivia()) sig_.push_back(i);
    }
  }

  ParseResult run() {
    ParseResult result;
    result.unit.file_path = file_path_;
    parse_unit(result.unit);
    result.errors = std::move(errors_);
    return result;
  }

 private:
  const std::vector<Token>& raw_;
  std::string file_path_;
  std::vector<std::size_t> sig_;  // indices of significant tokens in raw_
  std::size_t pos_ = 0;           // index into sig_
  DiagnosticList errors_;

  // -- cursor ---------------------------------------------------------

  const Token& tok(std::size_t offset = 0) const {
    std::size_t i = pos_ + offset;
    if (i < sig_.size()) return raw_[sig_[i]];
    if (!raw_.empty()) return raw_.back();  // EndOfInput
    static const Token eof{};
    return eof;
  }
  bool at_end() const { return tok().kind == TokenKind::EndOfInput; }
  void advance() {
    if (pos_ < sig_.size()) ++pos_;
  }
  bool at_punct(std::string_view p) const {
    return tok().is(TokenKind::Punctuation, p);
  }
  bool at_kw(std::string_view w) const {
    return tok().is(TokenKind::Keyword, w);
  }
  bool accept_punct(std::string_view p) {
    if (!at_punct(p)) return false;
    advance();
    return true;
  }
  bool accept_kw(std::string_view w) {
    if (!at_kw(w)) return false;
    advance();
    return true;
  }

  void error_here(std::string message) {
    const Token& t = tok();
    errors_.push_back(
        {DiagnosticKind::SyntaxError, t.line, t.column, std::move(message)});
  }

  std::string expected_message(std::string_view what) const {
    std::string got = tok().kind == TokenKind::EndOfInput
                          ? std::string("end of input")
                          : "'" + tok().lexeme + "'";
    return "expected " + std::string(what) + ", found " + got;
  }

  // -- generic skipping ------------------------------------------------

  // Skips a balanced `<...>` region. Gives up quietly at tokens that cannot
  // appear inside a type-argument list, so malformed generics do not drag
  // the cursor past the member.
  void skip_angles() {
    if (!tok().is(TokenKind::Operator, "<")) return;
    int depth = 0;
    while (!at_end()) {
      const Token& t = tok();
      if (t.is(TokenKind::Operator, "<")) {
        ++depth;
        advance();
        continue;
      }
      int closes = closing_angle_count(t);
      if (closes > 0) {
        advance();
        depth -= closes;
        if (depth <= 0) return;
        continue;
      }
      if (t.is(TokenKind::Punctuation, "{") ||
          t.is(TokenKind::Punctuation, "}") ||
          t.is(TokenKind::Punctuation, ";")) {
        return;  // not a generic argument list after all
      }
      advance();
    }
  }

  // Skips one annotation: '@' qualified-name [ '(' balanced ')' ].
  // Returns false when '@' starts `@interface` (handled elsewhere).
  bool skip_annotation() {
    if (!at_punct("@")) return false;
    if (tok(1).is(TokenKind::Keyword, "interface")) return false;
    advance();  // '@'
    while (tok().kind == TokenKind::Identifier) {
      advance();
      if (at_punct(".") && tok(1).kind == TokenKind::Identifier) {
        advance();
        continue;
      }
      break;
    }
    if (at_punct("(")) skip_balanced_parens();
    return true;
  }

  void skip_annotations() {
    while (skip_annotation()) {
    }
  }

  void skip_balanced_parens() {
    int depth = 0;
    while (!at_end()) {
      if (at_punct("(")) ++depth;
      if (at_punct(")")) {
        --depth;
        advance();
        if (depth == 0) return;
        continue;
      }
      advance();
    }
  }

  // Advances until `;` at bracket depth zero (consumed) or a `}` closing the
  // surrounding scope (left in place). Used for fields and error recovery.
  void skip_to_member_end() {
    int depth = 0;
    while (!at_end()) {
      const Token& t = tok();
      if (t.kind == TokenKind::Punctuation) {
        const std::string& p = t.lexeme;
        if (p == "{" || p == "(" || p == "[") {
          ++depth;
        } else if (p == ")" || p == "]") {
          if (depth > 0) --depth;
        } else if (p == "}") {
          if (depth == 0) return;
          --depth;
        } else if (p == ";" && depth == 0) {
          advance();
          return;
        }
      }
      advance();
    }
  }

  // Consumes a balanced `{...}` block, returning the raw index of the
  // closing brace (or the last consumed token when input ends early).
  std::size_t skip_balanced_braces() {
    int depth = 0;
    std::size_t last_raw = sig_.empty() ? 0 : sig_[std::min(pos_, sig_.size() - 1)];
    while (!at_end()) {
      const Token& t = tok();
      last_raw = sig_[pos_];
      if (t.is(TokenKind::Punctuation, "{")) ++depth;
      if (t.is(TokenKind::Punctuation, "}")) {
        advance();
        if (--depth == 0) return last_raw;
        continue;
      }
      advance();
    }
    return last_raw;
  }

  // -- grammar ----------------------------------------------------------

  void parse_unit(SourceUnit& unit) {
    skip_annotations();  // package-info style annotations
    if (accept_kw("package")) {
      unit.package_name = parse_qualified_name();
      if (unit.package_name.empty())
        error_here(expected_message("package name"));
      if (!accept_punct(";")) {
        error_here(expected_message("';' after package declaration"));
        skip_to_member_end();
      }
    }
    while (true) {
      skip_annotations();
      if (!at_kw("import")) break;
      advance();
      std::string name;
      if (accept_kw("static")) name = "static ";
      name += parse_qualified_name();
      if (at_punct(".") && tok(1).is(TokenKind::Operator, "*")) {
        advance();
        advance();
        name += ".*";
      }
      if (!accept_punct(";")) {
        error_here(expected_message("';' after import"));
        skip_to_member_end();
      }
      unit.imports.push_back(std::move(name));
    }
    while (!at_end()) {
      if (accept_punct(";")) continue;  // stray semicolons are legal
      if (auto type = parse_type_declaration()) {
        unit.types.push_back(std::move(*type));
      }
    }
  }

  std::string parse_qualified_name() {
    if (tok().kind != TokenKind::Identifier) return "";
    std::string name = tok().lexeme;
    advance();
    while (at_punct(".") && tok(1).kind == TokenKind::Identifier) {
      advance();
      name += "." + tok().lexeme;
      advance();
    }
    return name;
  }

  // Annotation type declarations (`@interface`) are consumed without
  // producing a TypeDecl.
  void skip_annotation_type_declaration() {
    advance();  // '@'
    advance();  // 'interface'
    if (tok().kind == TokenKind::Identifier) advance();
    while (!at_end() && !at_punct("{") && !at_punct(";")) advance();
    if (at_punct("{")) skip_balanced_braces();
  }

  std::optional<TypeDecl> parse_type_declaration() {
    skip_annotations();
    if (at_punct("@") && tok(1).is(TokenKind::Keyword, "interface")) {
      skip_annotation_type_declaration();
      return std::nullopt;
    }
    while (is_modifier(tok())) advance();
    skip_annotations();
    while (is_modifier(tok())) advance();

    TypeKind kind;
    if (accept_kw("class")) {
      kind = TypeKind::Class;
    } else if (accept_kw("interface")) {
      kind = TypeKind::Interface;
    } else if (accept_kw("enum")) {
      kind = TypeKind::Enum;
    } else {
      error_here(expected_message("type declaration"));
      recover_at_type_level();
      return std::nullopt;
    }

    TypeDecl decl;
    decl.kind = kind;
    if (tok().kind != TokenKind::Identifier) {
      error_here(expected_message("type name"));
      recover_at_type_level();
      return std::nullopt;
    }
    decl.name = tok().lexeme;
    decl.start_line = tok().line;
    advance();
    skip_angles();
    // extends / implements / permits: names only, skipped wholesale
    while (!at_end() && !at_punct("{") && !at_punct(";")) {
      if (tok().is(TokenKind::Operator, "<")) {
        skip_angles();
        continue;
      }
      advance();
    }
    if (!accept_punct("{")) {
      error_here(expected_message("'{' to open type body"));
      recover_at_type_level();
      return std::nullopt;
    }
    if (kind == TypeKind::Enum) skip_enum_constants();
    parse_type_body(decl);
    return decl;
  }

  void recover_at_type_level() {
    // Skip to the next ';' or past one balanced '{...}' block.
    while (!at_end()) {
      if (at_punct(";")) {
        advance();
        return;
      }
      if (at_punct("{")) {
        skip_balanced_braces();
        return;
      }
      advance();
    }
  }

  // Enum constants run from the opening brace to the first ';' at body
  // depth (constant arguments and constant class bodies are balanced away).
  // A constants-only enum has no ';' and ends at the body's '}'.
  void skip_enum_constants() {
    int depth = 0;
    while (!at_end()) {
      const Token& t = tok();
      if (t.kind == TokenKind::Punctuation) {
        const std::string& p = t.lexeme;
        if (p == "{" || p == "(" || p == "[") {
          ++depth;
        } else if (p == ")" || p == "]") {
          if (depth > 0) --depth;
        } else if (p == "}") {
          if (depth == 0) return;  // leave for parse_type_body to close
          --depth;
        } else if (p == ";" && depth == 0) {
          advance();
          return;
        }
      }
      advance();
    }
  }

  void parse_type_body(TypeDecl& decl) {
    while (!at_end()) {
      if (at_punct("}")) {
        decl.end_line = tok().line;
        advance();
        return;
      }
      parse_member(decl);
    }
    error_here("unexpected end of input inside type body");
    decl.end_line = raw_.back().line;
  }

  void parse_member(TypeDecl& decl) {
    skip_annotations();
    if (at_punct("@") && tok(1).is(TokenKind::Keyword, "interface")) {
      skip_annotation_type_declaration();
      return;
    }
    if (accept_punct(";")) return;

    const int member_start_line = tok().line;
    std::vector<std::string> modifiers;
    while (true) {
      if (is_modifier(tok())) {
        modifiers.push_back(tok().lexeme);
        advance();
        continue;
      }
      if (at_punct("@") && !tok(1).is(TokenKind::Keyword, "interface")) {
        skip_annotations();
        continue;
      }
      break;
    }

    if (at_kw("class") || at_kw("interface") || at_kw("enum")) {
      if (auto nested = parse_type_declaration()) {
        decl.nested_types.push_back(std::move(*nested));
      }
      return;
    }
    if (at_punct("{")) {  // instance or static initializer block
      skip_balanced_braces();
      return;
    }
    if (tok().is(TokenKind::Operator, "<")) skip_angles();  // generic method

    MethodDecl method;
    method.modifiers = std::move(modifiers);
    method.start_line = member_start_line;

    // Constructor: identifier directly followed by '('.
    if (tok().kind == TokenKind::Identifier && tok(1).is(TokenKind::Punctuation, "(")) {
      method.is_constructor = true;
      method.name = tok().lexeme;
      method.return_type = TypeRef{decl.name, 0, false};
      advance();
    } else {
      TypeRef type;
      if (!parse_type_ref(type)) {
        error_here(expected_message("member declaration"));
        skip_to_member_end();
        return;
      }
      if (tok().kind != TokenKind::Identifier) {
        error_here(expected_message("member name"));
        skip_to_member_end();
        return;
      }
      method.return_type = std::move(type);
      method.name = tok().lexeme;
      advance();
      if (!at_punct("(")) {  // field declaration: skip to ';'
        skip_to_member_end();
        return;
      }
    }

    if (!parse_params(method.params)) {
      skip_to_member_end();
      return;
    }
    while (at_punct("[") && tok(1).is(TokenKind::Punctuation, "]")) {
      ++method.return_type.array_dims;  // C-style array return dims
      advance();
      advance();
    }
    if (accept_kw("throws")) {
      while (!at_end() && !at_punct("{") && !at_punct(";")) advance();
    }
    if (at_punct("{")) {
      std::size_t open_raw = sig_[pos_];
      std::size_t close_raw = skip_balanced_braces();
      method.body_tokens.assign(raw_.begin() + static_cast<std::ptrdiff_t>(open_raw),
                                raw_.begin() + static_cast<std::ptrdiff_t>(close_raw) + 1);
      method.end_line = raw_[close_raw].line;
    } else if (at_punct(";")) {
      method.end_line = tok().line;
      advance();
    } else {
      error_here(expected_message("method body or ';'"));
      skip_to_member_end();
      return;
    }
    decl.methods.push_back(std::move(method));
  }

  bool parse_type_ref(TypeRef& out) {
    if (tok().kind == TokenKind::Keyword &&
        is_primitive_type_name(tok().lexeme)) {
      out.base_name = tok().lexeme;
      out.is_primitive = true;
      advance();
    } else if (tok().kind == TokenKind::Identifier) {
      out.base_name = tok().lexeme;
      advance();
      if (tok().is(TokenKind::Operator, "<")) skip_angles();
      while (at_punct(".") && tok(1).kind == TokenKind::Identifier) {
        advance();
        out.base_name += "." + tok().lexeme;
        advance();
        if (tok().is(TokenKind::Operator, "<")) skip_angles();
      }
    } else {
      return false;
    }
    while (at_punct("[") && tok(1).is(TokenKind::Punctuation, "]")) {
      ++out.array_dims;
      advance();
      advance();
    }
    return true;
  }

  bool parse_params(std::vector<ParamDecl>& out) {
    advance();  // '('
    if (accept_punct(")")) return true;
    while (true) {
      skip_annotations();
      while (is_modifier(tok())) advance();  // 'final' mostly
      ParamDecl param;
      if (!parse_type_ref(param.type)) {
        error_here(expected_message("parameter type"));
        return false;
      }
      if (at_punct("...")) {
        ++param.type.array_dims;  // varargs encode as one array dimension
        advance();
      }
      if (tok().kind != TokenKind::Identifier) {
        error_here(expected_message("parameter name"));
        return false;
      }
      param.name = tok().lexeme;
      advance();
      while (at_punct("[") && tok(1).is(TokenKind::Punctuation, "]")) {
        ++param.type.array_dims;  // C-style dims bind to the declarator
        advance();
        advance();
      }
      out.push_back(std::move(param));
      if (accept_punct(",")) continue;
      if (accept_punct(")")) return true;
      error_here(expected_message("',' or ')' in parameter list"));
      return false;
    }
  }
};

}  // namespace

ParseResult parse_compilation_unit(const std::vector<Token>& tokens,
                                   const std::string& file_path) {
  return Parser(tokens, file_path).run();
}

ParseResult parse_java(std::string_view source, const std::string& file_path) {
  LexResult lexed = tokenize(source);
  ParseResult result = parse_compilation_unit(lexed.tokens, file_path);
  result.unit.line_count = count_loc(source);
  result.errors.insert(result.errors.begin(), lexed.errors.begin(),
                       lexed.errors.end());
  return result;
}

}  // namespace epit
