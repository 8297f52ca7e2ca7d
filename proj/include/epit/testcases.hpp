#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epit/clones.hpp"
#include "epit/model.hpp"

namespace epit {

// The three scenarios generated for every method, with their fixed boundary
// values: valid -> 1, invalid -> -1, null -> null.
enum class ScenarioKind { Valid = 1, Invalid = 2, NullInput = 3 };

constexpr std::array<ScenarioKind, 3> kAllScenarioKinds = {
    ScenarioKind::Valid, ScenarioKind::Invalid, ScenarioKind::NullInput};

int scenario_ordinal(ScenarioKind kind);          // 1, 2, 3
std::string_view scenario_word(ScenarioKind kind);      // "valid", ...
std::string_view scenario_boundary(ScenarioKind kind);  // "1", "-1", "null"

// Canonical: "Test Case 1 : valid [args] are input with : 1"
// Compat:    "Test Case 1 : valid [args]are input with :1"
std::string render_scenario_line(ScenarioKind kind,
                                 std::span<const std::string> param_names,
                                 bool paper_compat = false);

struct TestCase {
  std::string file_path;
  std::string package_name;
  std::string class_name;
  std::string method_name;
  std::string signature;
  ScenarioKind kind = ScenarioKind::Valid;
  std::vector<std::string> param_names;
  std::string rendered_line;  // canonical form

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

struct TestSuite {
  std::vector<TestCase> cases;  // model order, then kind ordinal
  long count_without_refactoring = 0;  // 3 x eligible methods
  long count_with_refactoring = 0;     // 3 x clone-group representatives
  bool refactoring_enabled = false;
};

// The three scenarios for one method, in kind order.
std::array<TestCase, 3> generate_scenarios(const MethodRecord& method);

// Builds the project suite. `groups` must be the clone partition of
// eligible_methods(model, include_test_files), in that order. Both counts
// are always computed; the emitted case set shrinks to representatives only
// when `refactor` is on.
TestSuite generate_project_testcases(const ProjectModel& model,
                                     const std::vector<CloneGroup>& groups,
                                     bool refactor,
                                     bool include_test_files = false);

// JUnit-style stub emission. Each source class yields one
// <ClassName>GeneratedTest class with test_<method>_<kind> stubs carrying
// the scenario line as a comment and a failing placeholder body.
std::string emit_junit_stub(const MethodRecord& method,
                            std::span<const TestCase> cases);

struct StubFile {
  std::string rel_path;  // package dirs + <ClassName>GeneratedTest.java
  std::string content;
};

// Groups the suite's cases by declaring class and renders one stub file per
// class. Overloaded method names get an index suffix.
std::vector<StubFile> build_junit_stubs(const TestSuite& suite);

void write_junit_stubs(std::span<const StubFile> stubs,
                       const std::filesystem::path& out_dir);

}  // namespace epit
