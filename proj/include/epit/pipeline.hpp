#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "epit/clock.hpp"
#include "epit/clones.hpp"
#include "epit/model.hpp"
#include "epit/report.hpp"
#include "epit/testcases.hpp"

namespace epit {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::filesystem::path root;
  std::string project_name;  // defaults to the root directory name
  bool refactor = false;
  CloneLevel clone_level = CloneLevel::Type1;
  bool junit = false;  // requires out_dir
  OutputFormat format = OutputFormat::Text;
  bool paper_compat = false;
  std::optional<std::filesystem::path> out_dir;
  bool include_test_files = false;
  std::vector<std::string> exclude_globs;
};

struct RunOutput {
  ProjectModel model;
  std::vector<CloneGroup> groups;  // over eligible methods
  TestSuite suite;
  ProjectSummary summary;
  std::string text_report;  // analysis report + summary
  std::string json_report;
  std::vector<StubFile> stubs;  // populated when junit is on
  int total_parse_errors = 0;
};

// Full pipeline: walk/parse -> clone grouping -> scenario generation ->
// render. Stub files are built but only written to disk when
// `write_outputs` is true. Throws std::runtime_error on an unreadable root.
RunOutput run_analysis(const RunConfig& config, const ReportClock& clock,
                       bool write_outputs = true);

// 0 clean, 1 when any file had parse errors.
int exit_code_for(const RunOutput& output);

}  // namespace epit
