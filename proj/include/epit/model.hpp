#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace epit {

enum class CloneLevel { Type1 = 1, Type2 = 2 };

struct Fingerprint {
  CloneLevel level = CloneLevel::Type1;
  std::string digest;  // 16 hex chars; empty for bodiless methods
  std::size_t token_count = 0;

  bool empty() const { return digest.empty(); }

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Everything later stages need to know about one method.
struct MethodRecord {
  std::string file_path;  // project-relative, '/' separators
  std::string package_name;
  std::string class_name;  // dotted for nested types, e.g. "Outer.Inner"
  std::string method_name;
  std::string signature;          // e.g. "([QString;)V"
  std::string return_descriptor;  // e.g. "V"
  std::vector<std::string> param_names;
  Fingerprint fingerprint;
  std::vector<std::string> normalized_body;  // sequence behind the digest
  int start_line = 0;
  int end_line = 0;

  std::size_t param_count() const { return param_names.size(); }

  friend bool operator==(const MethodRecord&, const MethodRecord&) = default;
};

struct FileRecord {
  std::string path;  // project-relative
  std::string package_name;
  long line_count = 0;
  std::vector<MethodRecord> methods;  // source order
  int parse_error_count = 0;
  bool test_file = false;  // basename matches *Test.java

  friend bool operator==(const FileRecord&, const FileRecord&) = default;
};

struct ProjectModel {
  std::string project_name;
  std::vector<FileRecord> files;  // ordered by path
  std::vector<std::string> unique_package_names;  // sorted, no duplicates
  std::vector<std::string> package_occurrences;   // one per declaring file
  long total_loc = 0;
  std::vector<std::string> io_errors;  // unreadable files, walk order
  CloneLevel clone_level = CloneLevel::Type1;

  friend bool operator==(const ProjectModel&, const ProjectModel&) = default;
};

// Methods that take part in clone grouping and test-case generation:
// everything outside *Test.java files unless those are opted in.
std::vector<MethodRecord> eligible_methods(const ProjectModel& model,
                                           bool include_test_files);

}  // namespace epit
