#include "epit/extractor.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "epit/clones.hpp"
#include "epit/parser.hpp"

namespace fs = std::filesystem;

namespace epit {

namespace {

const char kPrimitiveCodes[][2][8] = {
    {"int", "I"},   {"void", "V"},  {"boolean", "Z"},
    {"byte", "B"},  {"char", "C"},  {"short", "S"},
    {"long", "J"},  {"float", "F"}, {"double", "D"},
};

struct ExtractContext {
  const SourceUnit* unit;
  CloneLevel level;
  std::vector<MethodRecord>* out;
};

MethodRecord make_record(const MethodDecl& m, const std::string& class_path,
                         const ExtractContext& ctx) {
  MethodRecord r;
  r.file_path = ctx.unit->file_path;
  r.package_name = ctx.unit->package_name;
  r.class_name = class_path;
  r.method_name = m.name;
  r.signature = encode_signature(m);
  r.return_descriptor = type_descriptor(m.return_type);
  for (const ParamDecl& p : m.params) r.param_names.push_back(p.name);
  r.fingerprint = fingerprint_body(m.body_tokens, ctx.level);
  r.normalized_body = normalize_body(m.body_tokens, ctx.level);
  r.start_line = m.start_line;
  r.end_line = m.end_line;
  return r;
}

// Emits the type's own methods and its nested types' methods merged back
// into source order (start lines interleave them correctly).
void walk_type(const TypeDecl& type, const std::string& class_path,
               const ExtractContext& ctx) {
  std::size_t mi = 0, ti = 0;
  while (mi < type.methods.size() || ti < type.nested_types.size()) {
    bool take_method;
    if (mi == type.methods.size()) {
      take_method = false;
    } else if (ti == type.nested_types.size()) {
      take_method = true;
    } else {
      take_method =
          type.methods[mi].start_line <= type.nested_types[ti].start_line;
    }
    if (take_method) {
      ctx.out->push_back(make_record(type.methods[mi], class_path, ctx));
      ++mi;
    } else {
      const TypeDecl& nested = type.nested_types[ti];
      walk_type(nested, class_path + "." + nested.name, ctx);
      ++ti;
    }
  }
}

bool has_java_extension(const fs::path& p) {
  return p.extension() == ".java";
}

bool is_test_file_name(const std::string& basename) {
  return glob_match("*Test.java", basename);
}

bool excluded(const std::string& rel_path, const std::string& basename,
              const std::vector<std::string>& globs) {
  return std::any_of(globs.begin(), globs.end(), [&](const std::string& g) {
    return glob_match(g, rel_path) || glob_match(g, basename);
  });
}

// Lexicographic, depth-first walk. Hidden entries are skipped.
void collect_java_files(const fs::path& dir, const fs::path& root,
                        std::vector<fs::path>& out,
                        std::vector<std::string>& io_errors) {
  std::vector<fs::path> entries;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end;
       it.increment(ec)) {
    entries.push_back(it->path());
  }
  if (ec) {
    io_errors.push_back(dir.generic_string() + ": " + ec.message());
    return;
  }
  std::sort(entries.begin(), entries.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.generic_string() < b.generic_string();
            });
  for (const fs::path& p : entries) {
    std::string name = p.filename().generic_string();
    if (name.empty() || name[0] == '.') continue;
    std::error_code type_ec;
    if (fs::is_directory(p, type_ec)) {
      collect_java_files(p, root, out, io_errors);
    } else if (has_java_extension(p)) {
      out.push_back(p);
    }
  }
}

bool read_file(const fs::path& p, std::string& out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  in.seekg(0, std::ios::end);
  std::streamoff n = in.tellg();
  if (n < 0) return false;
  out.resize(static_cast<std::size_t>(n));
  in.seekg(0, std::ios::beg);
  if (n > 0) in.read(out.data(), n);
  return in.good() || in.eof();
}

}  // namespace

long count_loc(std::string_view text) {
  if (text.empty()) return 0;
  long lines = static_cast<long>(std::count(text.begin(), text.end(), '\n'));
  if (text.back() != '\n') ++lines;
  return lines;
}

std::string type_descriptor(const TypeRef& type) {
  std::string d(static_cast<std::size_t>(type.array_dims), '[');
  if (type.is_primitive) {
    for (const auto& entry : kPrimitiveCodes) {
      if (type.base_name == entry[0]) return d + entry[1];
    }
  }
  return d + "Q" + type.base_name + ";";
}

std::string encode_signature(const MethodDecl& method) {
  std::string sig = "(";
  for (const ParamDecl& p : method.params) sig += type_descriptor(p.type);
  sig += ")";
  sig += type_descriptor(method.return_type);
  return sig;
}

std::vector<MethodRecord> extract_methods(const SourceUnit& unit,
                                          CloneLevel level) {
  std::vector<MethodRecord> records;
  ExtractContext ctx{&unit, level, &records};
  for (const TypeDecl& type : unit.types) {
    walk_type(type, type.name, ctx);
  }
  return records;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  // Iterative wildcard match with backtracking over the last '*'.
  std::size_t p = 0, t = 0;
  std::size_t star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() &&
        (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<MethodRecord> eligible_methods(const ProjectModel& model,
                                           bool include_test_files) {
  std::vector<MethodRecord> out;
  for (const FileRecord& file : model.files) {
    if (file.test_file && !include_test_files) continue;
    out.insert(out.end(), file.methods.begin(), file.methods.end());
  }
  return out;
}

ProjectModel build_project_model(const fs::path& root,
                                 const std::string& project_name,
                                 const WalkOptions& options) {
  std::error_code ec;
  if (!fs::exists(root, ec) || ec) {
    throw std::runtime_error("project root does not exist: " +
                             root.generic_string());
  }
  if (!fs::is_directory(root, ec) || ec) {
    throw std::runtime_error("project root is not a directory: " +
                             root.generic_string());
  }

  ProjectModel model;
  model.project_name = project_name;
  model.clone_level = options.clone_level;

  std::vector<fs::path> files;
  collect_java_files(root, root, files, model.io_errors);

  std::set<std::string> packages;
  for (const fs::path& p : files) {
    std::string rel = fs::relative(p, root, ec).generic_string();
    if (ec) rel = p.generic_string();
    std::string basename = p.filename().generic_string();
    if (excluded(rel, basename, options.exclude_globs)) continue;

    std::string text;
    if (!read_file(p, text)) {
      model.io_errors.push_back(rel + ": cannot read file");
      continue;
    }

    ParseResult parsed = parse_java(text, rel);
    FileRecord record;
    record.path = rel;
    record.package_name = parsed.unit.package_name;
    record.line_count = parsed.unit.line_count;
    record.methods = extract_methods(parsed.unit, options.clone_level);
    record.parse_error_count = static_cast<int>(parsed.errors.size());
    record.test_file = is_test_file_name(basename);

    model.total_loc += record.line_count;
    if (!record.package_name.empty()) {
      model.package_occurrences.push_back(record.package_name);
      packages.insert(record.package_name);
    }
    model.files.push_back(std::move(record));
  }
  model.unique_package_names.assign(packages.begin(), packages.end());
  return model;
}

}  // namespace epit
