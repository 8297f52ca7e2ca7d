#include "epit/pipeline.hpp"

#include <chrono>

#include "epit/extractor.hpp"

namespace epit {

namespace {

using SteadyPoint = std::chrono::steady_clock::time_point;

std::int64_t phase_ms(const ReportClock& clock, SteadyPoint start) {
  return clock.elapsed_ms_since(start);
}

}  // namespace

RunOutput run_analysis(const RunConfig& config, const ReportClock& clock,
                       bool write_outputs) {
  RunOutput out;
  PhaseTimings timings;
  timings.start_wall = clock.wall_timestamp();
  timings.start_iso = clock.iso_timestamp();
  const SteadyPoint run_start = std::chrono::steady_clock::now();

  std::string project_name = config.project_name;
  if (project_name.empty()) {
    project_name = config.root.filename().generic_string();
    if (project_name.empty()) {  // root given with a trailing slash
      project_name = config.root.parent_path().filename().generic_string();
    }
  }

  WalkOptions walk;
  walk.clone_level = config.clone_level;
  walk.exclude_globs = config.exclude_globs;

  SteadyPoint phase_start = std::chrono::steady_clock::now();
  out.model = build_project_model(config.root, project_name, walk);
  timings.phases.push_back({"parse", phase_ms(clock, phase_start)});

  phase_start = std::chrono::steady_clock::now();
  std::vector<MethodRecord> eligible =
      eligible_methods(out.model, config.include_test_files);
  out.groups = detect_clone_groups(eligible, config.clone_level);
  timings.phases.push_back({"clones", phase_ms(clock, phase_start)});

  phase_start = std::chrono::steady_clock::now();
  out.suite = generate_project_testcases(out.model, out.groups,
                                         config.refactor,
                                         config.include_test_files);
  if (config.junit) {
    out.stubs = build_junit_stubs(out.suite);
    if (write_outputs && config.out_dir) {
      write_junit_stubs(out.stubs, *config.out_dir);
    }
  }
  timings.phases.push_back({"generate", phase_ms(clock, phase_start)});

  timings.end_wall = clock.wall_timestamp();
  timings.end_iso = clock.iso_timestamp();
  timings.elapsed_ms = clock.elapsed_ms_since(run_start);

  out.summary = build_summary(out.model, out.suite, timings, config.junit);

  RenderOptions render{config.paper_compat};
  out.text_report =
      render_analysis_report(out.model, out.suite, timings, render) +
      render_summary(out.summary, render);
  out.json_report = render_json(out.model, out.groups, out.suite, out.summary,
                                config.include_test_files);

  for (const FileRecord& file : out.model.files) {
    out.total_parse_errors += file.parse_error_count;
  }
  return out;
}

int exit_code_for(const RunOutput& output) {
  return output.total_parse_errors > 0 ? 1 : 0;
}

}  // namespace epit
