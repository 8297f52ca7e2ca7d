#pragma once

#include <string>
#include <vector>

#include "epit/ast.hpp"
#include "epit/diagnostics.hpp"
#include "epit/lexer.hpp"

namespace epit {

struct ParseResult {
  SourceUnit unit;
  DiagnosticList errors;
};

// Builds a declaration-level SourceUnit from a token stream. Syntax errors
// are recorded and parsing resumes at the next `;` or balanced `}` at the
// same level, so a file with errors still contributes whatever methods were
// parsed successfully.
ParseResult parse_compilation_unit(const std::vector<Token>& tokens,
                                   const std::string& file_path);

// tokenize + parse in one step; lexical and syntax errors are merged and
// unit.line_count is filled in from the raw text.
ParseResult parse_java(std::string_view source, const std::string& file_path);

}  // namespace epit
