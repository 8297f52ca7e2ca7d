// Command-line front end: `epit analyze <ROOT> [flags...]`.
//
// Exit codes: 0 clean run, 1 when any source file had parse errors (the
// reports are still produced), 2 on usage or I/O failure.

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "epit/pipeline.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"Java source analyzer and test-scenario generator"};
  app.require_subcommand(1);

  epit::RunConfig config;
  std::string root_arg;
  std::string out_arg;
  int clone_level = 1;
  std::string format = "text";

  CLI::App* analyze =
      app.add_subcommand("analyze", "Analyze a project directory");
  analyze->add_option("ROOT", root_arg, "Project root directory")->required();
  analyze->add_option("--project", config.project_name,
                      "Project name (default: root directory name)");
  analyze->add_flag("--refactor", config.refactor,
                    "Generate scenarios once per clone group");
  analyze->add_option("--clone-level", clone_level,
                      "Clone normalization level: 1 or 2")
      ->check(CLI::IsMember({1, 2}));
  analyze->add_flag("--junit", config.junit,
                    "Emit JUnit-style stub files (requires --out)");
  analyze->add_option("--format", format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_flag("--paper-compat", config.paper_compat,
                    "Reproduce the original console spacing");
  analyze->add_option("--out", out_arg,
                      "Output directory for stubs and report.json");
  analyze->add_flag("--include-test-files", config.include_test_files,
                    "Generate scenarios for *Test.java files too");
  analyze->add_option("--exclude", config.exclude_globs,
                      "Exclusion glob, repeatable (matches relative path "
                      "or file name)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  config.root = root_arg;
  config.clone_level = clone_level == 2 ? epit::CloneLevel::Type2
                                        : epit::CloneLevel::Type1;
  config.format =
      format == "json" ? epit::OutputFormat::Json : epit::OutputFormat::Text;
  if (!out_arg.empty()) config.out_dir = fs::path(out_arg);

  if (config.junit && !config.out_dir) {
    std::cerr << "error: --junit requires --out DIR\n";
    return 2;
  }
  std::error_code ec;
  if (!fs::is_directory(config.root, ec) || ec) {
    std::cerr << "error: project root is not a readable directory: "
              << config.root.generic_string() << "\n";
    return 2;
  }

  try {
    epit::ReportClock clock = epit::ReportClock::from_env();
    epit::RunOutput output = epit::run_analysis(config, clock);

    if (config.format == epit::OutputFormat::Json) {
      if (config.out_dir) {
        fs::create_directories(*config.out_dir);
        fs::path target = *config.out_dir / "report.json";
        std::ofstream file(target, std::ios::binary);
        if (!file) {
          std::cerr << "error: cannot write " << target.generic_string()
                    << "\n";
          return 2;
        }
        file << output.json_report;
      } else {
        std::cout << output.json_report;
      }
    } else {
      std::cout << output.text_report;
    }

    for (const std::string& err : output.model.io_errors) {
      std::cerr << "warning: " << err << "\n";
    }
    return epit::exit_code_for(output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
