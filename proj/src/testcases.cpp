#include "epit/testcases.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "epit/extractor.hpp"

namespace epit {

namespace {

std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string stub_class_name(const std::string& class_name) {
  std::string flat = class_name;
  for (char& c : flat) {
    if (c == '.') c = '_';
  }
  return flat + "GeneratedTest";
}

}  // namespace

int scenario_ordinal(ScenarioKind kind) { return static_cast<int>(kind); }

std::string_view scenario_word(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Valid: return "valid";
    case ScenarioKind::Invalid: return "invalid";
    case ScenarioKind::NullInput: return "null";
  }
  return "valid";
}

std::string_view scenario_boundary(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Valid: return "1";
    case ScenarioKind::Invalid: return "-1";
    case ScenarioKind::NullInput: return "null";
  }
  return "1";
}

std::string render_scenario_line(ScenarioKind kind,
                                 std::span<const std::string> param_names,
                                 bool paper_compat) {
  std::string line = "Test Case " + std::to_string(scenario_ordinal(kind));
  line += " : ";
  line += scenario_word(kind);
  line += " [";
  line += join(param_names, ", ");
  line += "]";
  // Compat keeps the original console's cramped spacing around the bracket
  // and the boundary value.
  line += paper_compat ? "are input with :" : " are input with : ";
  line += scenario_boundary(kind);
  return line;
}

std::array<TestCase, 3> generate_scenarios(const MethodRecord& method) {
  std::array<TestCase, 3> cases;
  for (std::size_t i = 0; i < kAllScenarioKinds.size(); ++i) {
    TestCase& c = cases[i];
    c.file_path = method.file_path;
    c.package_name = method.package_name;
    c.class_name = method.class_name;
    c.method_name = method.method_name;
    c.signature = method.signature;
    c.kind = kAllScenarioKinds[i];
    c.param_names = method.param_names;
    c.rendered_line = render_scenario_line(c.kind, c.param_names, false);
  }
  return cases;
}

TestSuite generate_project_testcases(const ProjectModel& model,
                                     const std::vector<CloneGroup>& groups,
                                     bool refactor, bool include_test_files) {
  std::vector<MethodRecord> eligible =
      eligible_methods(model, include_test_files);

  TestSuite suite;
  suite.refactoring_enabled = refactor;
  suite.count_without_refactoring = 3 * static_cast<long>(eligible.size());
  suite.count_with_refactoring = 3 * static_cast<long>(groups.size());

  std::vector<bool> emit(eligible.size(), !refactor);
  if (refactor) {
    for (const CloneGroup& g : groups) emit[g.representative] = true;
  }
  for (std::size_t i = 0; i < eligible.size(); ++i) {
    if (!emit[i]) continue;
    for (TestCase& c : generate_scenarios(eligible[i])) {
      suite.cases.push_back(std::move(c));
    }
  }
  return suite;
}

namespace {

// Renders one stub class. `method_cases` holds the scenario triples in
// suite order; overloaded names get "_2", "_3", ... appended.
std::string render_stub_class(const std::string& package_name,
                              const std::string& class_name,
                              std::span<const TestCase> cases) {
  std::string out;
  if (!package_name.empty()) {
    out += "package " + package_name + ";\n\n";
  }
  out += "import org.junit.Test;\n";
  out += "import static org.junit.Assert.fail;\n\n";
  out += "public class " + stub_class_name(class_name) + " {\n";

  std::map<std::string, int> name_uses;
  for (std::size_t i = 0; i < cases.size(); i += 3) {
    const std::string& method = cases[i].method_name;
    int use = ++name_uses[method];
    std::string suffix = use > 1 ? "_" + std::to_string(use) : "";
    for (std::size_t k = 0; k < 3 && i + k < cases.size(); ++k) {
      const TestCase& c = cases[i + k];
      out += "\n";
      out += "    // " + c.rendered_line + "\n";
      out += "    @Test\n";
      out += "    public void test_" + method + "_" +
             std::string(scenario_word(c.kind)) + suffix + "() {\n";
      out += "        fail(\"scenario not implemented\");\n";
      out += "    }\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string emit_junit_stub(const MethodRecord& method,
                            std::span<const TestCase> cases) {
  return render_stub_class(method.package_name, method.class_name, cases);
}

std::vector<StubFile> build_junit_stubs(const TestSuite& suite) {
  // Group cases by declaring class, preserving first-seen order.
  struct ClassCases {
    std::string package_name;
    std::string class_name;
    std::vector<TestCase> cases;
  };
  std::vector<ClassCases> classes;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const TestCase& c : suite.cases) {
    auto key = std::make_pair(c.file_path, c.class_name);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, classes.size());
      classes.push_back({c.package_name, c.class_name, {}});
      it = index.find(key);
    }
    classes[it->second].cases.push_back(c);
  }

  std::vector<StubFile> stubs;
  stubs.reserve(classes.size());
  for (const ClassCases& cc : classes) {
    StubFile stub;
    std::string dir;
    if (!cc.package_name.empty()) {
      dir = cc.package_name;
      for (char& c : dir) {
        if (c == '.') c = '/';
      }
      dir += "/";
    }
    stub.rel_path = dir + stub_class_name(cc.class_name) + ".java";
    stub.content = render_stub_class(cc.package_name, cc.class_name, cc.cases);
    stubs.push_back(std::move(stub));
  }
  return stubs;
}

void write_junit_stubs(std::span<const StubFile> stubs,
                       const std::filesystem::path& out_dir) {
  for (const StubFile& stub : stubs) {
    std::filesystem::path target = out_dir / stub.rel_path;
    std::filesystem::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write stub file: " +
                               target.generic_string());
    }
    out << stub.content;
  }
}

}  // namespace epit
