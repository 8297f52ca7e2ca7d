#pragma once

#include <string>
#include <vector>

#include "epit/token.hpp"

namespace epit {

// A source-level type reference: base name plus array dimensions. Generic
// arguments are discarded during parsing, so `List<String>[]` comes out as
// base "List" with one dimension.
struct TypeRef {
  std::string base_name;
  int array_dims = 0;
  bool is_primitive = false;  // base_name in {boolean..double, void}

  friend bool operator==(const TypeRef&, const TypeRef&) = default;
};

struct ParamDecl {
  TypeRef type;
  std::string name;

  friend bool operator==(const ParamDecl&, const ParamDecl&) = default;
};

// A method (or constructor) declaration. The body is kept as the verbatim
// token slice between the braces, inclusive; statement structure is never
// needed downstream.
struct MethodDecl {
  std::string name;
  std::vector<std::string> modifiers;  // source order
  TypeRef return_type;                 // declaring class for constructors
  std::vector<ParamDecl> params;
  std::vector<Token> body_tokens;  // empty for abstract/interface methods
  bool is_constructor = false;
  int start_line = 0;
  int end_line = 0;

  friend bool operator==(const MethodDecl&, const MethodDecl&) = default;
};

enum class TypeKind { Class, Interface, Enum };

struct TypeDecl {
  std::string name;
  TypeKind kind = TypeKind::Class;
  std::vector<MethodDecl> methods;     // source order
  std::vector<TypeDecl> nested_types;  // source order
  int start_line = 0;
  int end_line = 0;

  friend bool operator==(const TypeDecl&, const TypeDecl&) = default;
};

struct SourceUnit {
  std::string file_path;
  std::string package_name;  // empty when the file has no package declaration
  std::vector<std::string> imports;
  std::vector<TypeDecl> types;
  long line_count = 0;  // physical lines, see count_loc

  friend bool operator==(const SourceUnit&, const SourceUnit&) = default;
};

}  // namespace epit
