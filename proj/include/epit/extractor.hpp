#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "epit/ast.hpp"
#include "epit/model.hpp"

namespace epit {

// Physical line count: newlines, plus one for a non-empty last line without
// a trailing newline.
long count_loc(std::string_view text);

// JDT-style descriptors. Primitives map to single letters (int -> I,
// void -> V, ...); an unresolved source type T becomes "QT;"; each array
// dimension prepends "[".
std::string type_descriptor(const TypeRef& type);
std::string encode_signature(const MethodDecl& method);

// Flattens a parsed unit into MethodRecords in source order, nested types
// included. Fingerprints are computed at `level`; bodiless methods get an
// empty fingerprint.
std::vector<MethodRecord> extract_methods(const SourceUnit& unit,
                                          CloneLevel level = CloneLevel::Type1);

// Minimal glob matching for exclusion filters: `*` matches any run of
// characters (including '/'), `?` matches one.
bool glob_match(std::string_view pattern, std::string_view text);

struct WalkOptions {
  CloneLevel clone_level = CloneLevel::Type1;
  std::vector<std::string> exclude_globs;  // matched against relative path
                                           // and basename
};

// Walks `root` in deterministic lexicographic path order, parses every
// non-excluded `.java` file and aggregates the project model. Hidden
// (dot-prefixed) directories are skipped. An unreadable root throws
// std::runtime_error; an unreadable file is recorded and skipped.
ProjectModel build_project_model(const std::filesystem::path& root,
                                 const std::string& project_name,
                                 const WalkOptions& options = {});

}  // namespace epit
