#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epit/clones.hpp"
#include "epit/model.hpp"
#include "epit/testcases.hpp"

namespace epit {

struct PhaseDuration {
  std::string name;
  std::int64_t ms = 0;
};

struct PhaseTimings {
  std::string start_wall;  // "YYYY/MM/DD HH:MM:SS"
  std::string end_wall;
  std::string start_iso;  // ISO-8601, used by the JSON report
  std::string end_iso;
  std::int64_t elapsed_ms = 0;  // monotonic total, >= each phase
  std::vector<PhaseDuration> phases;
};

struct ProjectSummary {
  std::string project_name;
  int total_packages = 0;              // unique package names
  int package_occurrence_count = 0;    // files declaring a package
  std::vector<std::string> package_names;        // unique, sorted
  std::vector<std::string> package_occurrences;  // per declaring file
  int total_files = 0;
  std::vector<std::string> file_names;  // basenames, model order
  long total_loc = 0;
  long cases_without_refactoring = 0;
  long cases_with_refactoring = 0;
  int optimization_percent = 0;
  bool junit_builder = false;
  PhaseTimings timings;
};

// Relative reduction of generated cases, rounded half-up to an integer
// percent. 0 when nothing was generated. Throws std::invalid_argument when
// with > without, which would mean the generator miscounted.
int compute_optimization(long without_refactoring, long with_refactoring);

ProjectSummary build_summary(const ProjectModel& model, const TestSuite& suite,
                             const PhaseTimings& timings, bool junit_ran);

struct RenderOptions {
  bool paper_compat = false;
};

// Per-file console report: package details, file metadata, one block per
// method with its scenario lines.
std::string render_analysis_report(const ProjectModel& model,
                                   const TestSuite& suite,
                                   const PhaseTimings& timings,
                                   const RenderOptions& options = {});

// Project summary footer. Canonical mode prints unique package count and
// integer LOC; compat mode prints package occurrences and "<loc>.0".
std::string render_summary(const ProjectSummary& summary,
                           const RenderOptions& options = {});

// Machine-readable report: project, files[] with methods and clone group
// ids, testCases[], summary. Key order is fixed.
std::string render_json(const ProjectModel& model,
                        const std::vector<CloneGroup>& groups,
                        const TestSuite& suite, const ProjectSummary& summary,
                        bool include_test_files = false);

}  // namespace epit
