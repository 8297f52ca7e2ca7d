#include "epit/report.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "epit/extractor.hpp"

namespace epit {

namespace {

std::string basename_of(const std::string& path) {
  std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

using MethodKey = std::tuple<std::string, std::string, std::string, std::string>;

MethodKey key_of(const TestCase& c) {
  return {c.file_path, c.class_name, c.method_name, c.signature};
}

MethodKey key_of(const MethodRecord& m) {
  return {m.file_path, m.class_name, m.method_name, m.signature};
}

}  // namespace

int compute_optimization(long without_refactoring, long with_refactoring) {
  if (with_refactoring > without_refactoring) {
    throw std::invalid_argument(
        "with-refactoring case count exceeds without-refactoring count");
  }
  if (without_refactoring == 0) return 0;
  long diff = without_refactoring - with_refactoring;
  // round-half-up of 100 * diff / without
  return static_cast<int>((200 * diff + without_refactoring) /
                          (2 * without_refactoring));
}

ProjectSummary build_summary(const ProjectModel& model, const TestSuite& suite,
                             const PhaseTimings& timings, bool junit_ran) {
  ProjectSummary s;
  s.project_name = model.project_name;
  s.total_packages = static_cast<int>(model.unique_package_names.size());
  s.package_occurrence_count =
      static_cast<int>(model.package_occurrences.size());
  s.package_names = model.unique_package_names;
  s.package_occurrences = model.package_occurrences;
  s.total_files = static_cast<int>(model.files.size());
  for (const FileRecord& f : model.files) {
    s.file_names.push_back(basename_of(f.path));
  }
  s.total_loc = model.total_loc;
  s.cases_without_refactoring = suite.count_without_refactoring;
  s.cases_with_refactoring = suite.count_with_refactoring;
  s.optimization_percent = compute_optimization(
      suite.count_without_refactoring, suite.count_with_refactoring);
  s.junit_builder = junit_ran;
  s.timings = timings;
  return s;
}

std::string render_analysis_report(const ProjectModel& model,
                                   const TestSuite& suite,
                                   const PhaseTimings& timings,
                                   const RenderOptions& options) {
  // Scenario lines per method, in suite order.
  std::map<MethodKey, std::vector<const TestCase*>> cases_by_method;
  for (const TestCase& c : suite.cases) {
    cases_by_method[key_of(c)].push_back(&c);
  }

  std::string out;
  out += "Start Time: " + timings.start_wall + "\n";
  out += "### Analyzing project :" + model.project_name + " ###\n";
  out += "\n";
  for (const FileRecord& file : model.files) {
    out += "Details <Packages> :" + file.package_name + "\n";
    out += "-----\n";
    out += "Source file " + basename_of(file.path) + "\n";
    out += "\n";
    out += "FullPath /" + model.project_name + "/" + file.path + "\n";
    out += "Has number of lines: " + std::to_string(file.line_count) + "\n";
    out += "Details are :-\n";
    for (const MethodRecord& m : file.methods) {
      out += "\n";
      out += "Method name :" + m.method_name + "\n";
      out += "Signature :" + m.signature + "\n";
      out += "Return Type :" + m.return_descriptor + "\n";
      out += "Input variable :\n";
      for (const std::string& p : m.param_names) {
        out += p + "\n";
      }
      auto it = cases_by_method.find(key_of(m));
      if (it != cases_by_method.end()) {
        out += "Generate Possible Test Scenario:\n";
        for (const TestCase* c : it->second) {
          out += render_scenario_line(c->kind, c->param_names,
                                      options.paper_compat) +
                 "\n";
        }
      }
    }
    out += "\n";
    out += "-File analyzed End-\n";
    out += "\n";
  }
  return out;
}

std::string render_summary(const ProjectSummary& summary,
                           const RenderOptions& options) {
  const bool compat = options.paper_compat;
  std::string out;
  out += "##### Summary #####\n";
  out += "\n";
  out += "Project Name :" + summary.project_name + "\n";
  // The original console counted package declarations, not unique names.
  int package_count =
      compat ? summary.package_occurrence_count : summary.total_packages;
  out += "Total Package :" + std::to_string(package_count) + "\n";
  out += "Package Name :\n";
  const auto& package_list =
      compat ? summary.package_occurrences : summary.package_names;
  for (const std::string& p : package_list) {
    out += "    <" + p + ">\n";
  }
  out += "Total Files :" + std::to_string(summary.total_files) + "\n";
  out += "File Name :\n";
  for (const std::string& f : summary.file_names) {
    out += "    [" + f + "]\n";
  }
  out += "Total LOC :" + std::to_string(summary.total_loc) +
         (compat ? ".0" : "") + "\n";
  out += "Total Test Cases Without Refactoring:" +
         std::to_string(summary.cases_without_refactoring) + "\n";
  out += "Total Test Cases With Refactoring: " +
         std::to_string(summary.cases_with_refactoring) + "\n";
  out += "Optimization After Refactoring: " +
         std::to_string(summary.optimization_percent) + "%\n";
  out += std::string("JUnit Builder: ") +
         (summary.junit_builder ? "Yes" : "No") + "\n";
  out += "\n";
  out += "#####\n";
  out += "\n";
  out += "Start Time: " + summary.timings.start_wall + "\n";
  out += "End Time: " + summary.timings.end_wall + "\n";
  out += "Time Elapsed: " + std::to_string(summary.timings.elapsed_ms) +
         "ms\n";
  return out;
}

std::string render_json(const ProjectModel& model,
                        const std::vector<CloneGroup>& groups,
                        const TestSuite& suite, const ProjectSummary& summary,
                        bool include_test_files) {
  using json = nlohmann::ordered_json;

  // Clone group ids keyed by method identity; only eligible methods belong
  // to a group.
  std::map<MethodKey, std::size_t> group_ids;
  std::vector<MethodRecord> eligible =
      eligible_methods(model, include_test_files);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (std::size_t member : groups[gi].members) {
      group_ids[key_of(eligible[member])] = gi;
    }
  }

  json root;
  root["project"] = model.project_name;

  json files = json::array();
  for (const FileRecord& file : model.files) {
    json jf;
    jf["path"] = file.path;
    jf["package"] = file.package_name;
    jf["loc"] = file.line_count;
    jf["parseErrorCount"] = file.parse_error_count;
    json methods = json::array();
    for (const MethodRecord& m : file.methods) {
      json jm;
      jm["name"] = m.method_name;
      jm["class"] = m.class_name;
      jm["signature"] = m.signature;
      jm["returnType"] = m.return_descriptor;
      jm["params"] = m.param_names;
      auto it = group_ids.find(key_of(m));
      if (it != group_ids.end()) {
        jm["cloneGroupId"] = it->second;
      } else {
        jm["cloneGroupId"] = nullptr;
      }
      methods.push_back(std::move(jm));
    }
    jf["methods"] = std::move(methods);
    files.push_back(std::move(jf));
  }
  root["files"] = std::move(files);

  json cases = json::array();
  for (const TestCase& c : suite.cases) {
    json jc;
    jc["file"] = c.file_path;
    jc["class"] = c.class_name;
    jc["method"] = c.method_name;
    jc["kind"] = std::string(scenario_word(c.kind));
    jc["params"] = c.param_names;
    jc["boundary"] = std::string(scenario_boundary(c.kind));
    cases.push_back(std::move(jc));
  }
  root["testCases"] = std::move(cases);

  json js;
  js["projectName"] = summary.project_name;
  js["totalPackages"] = summary.total_packages;
  js["packageNames"] = summary.package_names;
  js["totalFiles"] = summary.total_files;
  js["fileNames"] = summary.file_names;
  js["totalLoc"] = summary.total_loc;
  js["casesWithoutRefactoring"] = summary.cases_without_refactoring;
  js["casesWithRefactoring"] = summary.cases_with_refactoring;
  js["optimizationPercent"] = summary.optimization_percent;
  js["junitBuilder"] = summary.junit_builder ? "Yes" : "No";
  json timings;
  timings["startTime"] = summary.timings.start_iso;
  timings["endTime"] = summary.timings.end_iso;
  timings["elapsedMs"] = summary.timings.elapsed_ms;
  json phases = json::array();
  for (const PhaseDuration& phase : summary.timings.phases) {
    phases.push_back({{"name", phase.name}, {"ms", phase.ms}});
  }
  timings["phases"] = std::move(phases);
  js["timings"] = std::move(timings);
  root["summary"] = std::move(js);

  return root.dump(2) + "\n";
}

}  // namespace epit
