#pragma once

#include <string>
#include <vector>

namespace epit {

enum class DiagnosticKind { LexicalError, SyntaxError };

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::SyntaxError;
  int line = 1;
  int column = 1;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string format_diagnostic(const Diagnostic& d, const std::string& file_path);

using DiagnosticList = std::vector<Diagnostic>;

}  // namespace epit
