#include "support/corpus.hpp"

#include <atomic>
#include <fstream>
#include <numeric>
#include <sstream>

namespace fs = std::filesystem;

namespace epit::testsupport {

namespace {

struct MethodSrc {
  std::string name;
  std::string body;  // between and including braces
};

struct FileSrc {
  std::string name;  // basename
  std::string package_name;
  std::vector<MethodSrc> methods;
  bool test_file = false;
};

// Bodies are assembled from a fixed statement menu so two methods are
// type-2 clones exactly when they picked the same plan. A plan can be
// re-materialized with fresh names/literals to make a type-2 (but not
// type-1) duplicate.
struct BodyPlan {
  std::vector<int> stmt_ids;
};

std::string materialize(const BodyPlan& plan, const std::string& a,
                        const std::string& b, const std::string& c,
                        const std::vector<long>& lits) {
  std::ostringstream out;
  out << "{\n";
  out << "        int " << a << " = " << lits[0] << ";\n";
  out << "        int " << b << " = " << a << " * 2;\n";
  for (std::size_t i = 0; i < plan.stmt_ids.size(); ++i) {
    long lit = lits[1 + i];
    switch (plan.stmt_ids[i]) {
      case 0:
        out << "        " << a << " = " << a << " + " << lit << ";\n";
        break;
      case 1:
        out << "        if (" << a << " > " << lit << ") {\n"
            << "            " << a << " = " << a << " - 1;\n"
            << "        }\n";
        break;
      case 2:
        out << "        for (int " << c << " = 0; " << c << " < " << lit
            << "; " << c << "++) {\n"
            << "            " << b << " += " << c << ";\n"
            << "        }\n";
        break;
      case 3:
        out << "        while (" << a << " > " << lit << ") {\n"
            << "            " << a << "--;\n"
            << "        }\n";
        break;
      case 4:
        out << "        " << b << " = " << a << " % " << lit << ";\n";
        break;
      case 5:
        out << "        String " << c << "s = \"s" << lit << "\";\n";
        break;
      default:
        out << "        " << b << " = " << b << " ^ " << lit << ";\n";
        break;
    }
  }
  out << "        return " << a << " + " << b << ";\n";
  out << "    }";
  return out.str();
}

std::string render_file(const FileSrc& file, int pad_lines) {
  std::ostringstream out;
  if (!file.package_name.empty()) {
    out << "package " << file.package_name << ";\n\n";
  }
  std::string class_name = file.name.substr(0, file.name.size() - 5);
  out << "public class " << class_name << " {\n";
  for (const MethodSrc& m : file.methods) {
    out << "\n    static int " << m.name << "(int seed) " << m.body << "\n";
  }
  out << "}\n";
  for (int i = 0; i < pad_lines; ++i) {
    out << "// filler line " << i << "\n";
  }
  return out.str();
}

}  // namespace

GeneratedCorpus generate_corpus(const fs::path& root,
                                const CorpusOptions& options) {
  std::mt19937_64 rng(options.seed);
  auto rand_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  int name_counter = 0;
  auto fresh_ident = [&](const char* prefix) {
    return std::string(prefix) + std::to_string(++name_counter);
  };

  std::vector<FileSrc> files;
  struct OriginRef {
    std::size_t file;
    BodyPlan plan;
    std::string body;
  };
  std::vector<OriginRef> origins;

  for (int f = 0; f < options.file_count; ++f) {
    FileSrc file;
    file.name = "Gen" + std::to_string(f) + ".java";
    file.package_name = "gen.p" + std::to_string(f % 3);
    int methods = rand_int(options.min_methods_per_file,
                           options.max_methods_per_file);
    for (int m = 0; m < methods; ++m) {
      BodyPlan plan;
      int stmts = rand_int(0, 5);
      for (int s = 0; s < stmts; ++s) plan.stmt_ids.push_back(rand_int(0, 6));
      std::vector<long> lits(plan.stmt_ids.size() + 1);
      for (long& l : lits) l = rand_int(2, 9999);
      std::string body = materialize(plan, fresh_ident("v"), fresh_ident("w"),
                                     fresh_ident("k"), lits);
      file.methods.push_back({fresh_ident("method"), body});
      origins.push_back({static_cast<std::size_t>(f), plan, body});
    }
    files.push_back(std::move(file));
  }

  for (int d = 0; d < options.type1_duplicates && !origins.empty(); ++d) {
    const OriginRef& src =
        origins[static_cast<std::size_t>(rand_int(0, static_cast<int>(origins.size()) - 1))];
    std::size_t target = static_cast<std::size_t>(
        rand_int(0, static_cast<int>(files.size()) - 1));
    files[target].methods.push_back({fresh_ident("copy"), src.body});
  }
  for (int d = 0; d < options.type2_duplicates && !origins.empty(); ++d) {
    const OriginRef& src =
        origins[static_cast<std::size_t>(rand_int(0, static_cast<int>(origins.size()) - 1))];
    std::vector<long> lits(src.plan.stmt_ids.size() + 1);
    for (long& l : lits) l = rand_int(10000, 99999);
    std::string body = materialize(src.plan, fresh_ident("ra"),
                                   fresh_ident("rb"), fresh_ident("rc"), lits);
    std::size_t target = static_cast<std::size_t>(
        rand_int(0, static_cast<int>(files.size()) - 1));
    files[target].methods.push_back({fresh_ident("renamed"), body});
  }

  if (options.with_test_file) {
    FileSrc test;
    test.name = "GenSuiteTest.java";
    test.package_name = "gen.p0";
    test.test_file = true;
    for (int m = 0; m < 2; ++m) {
      BodyPlan plan{{0, 4}};
      std::vector<long> lits{7, 11, 13};
      test.methods.push_back(
          {fresh_ident("check"),
           materialize(plan, fresh_ident("t"), fresh_ident("u"),
                       fresh_ident("x"), lits)});
    }
    files.push_back(std::move(test));
  }

  GeneratedCorpus corpus;
  corpus.root = root;
  fs::create_directories(root);
  for (const FileSrc& file : files) {
    fs::path dir = root;
    std::string pkg_dir = file.package_name;
    for (char& ch : pkg_dir) {
      if (ch == '.') ch = '/';
    }
    if (!pkg_dir.empty()) dir /= pkg_dir;
    fs::create_directories(dir);
    fs::path target = dir / file.name;
    std::ofstream out(target, std::ios::binary);
    out << render_file(file, options.pad_lines_per_file);
    corpus.files.push_back(target);
    corpus.total_method_count += static_cast<int>(file.methods.size());
    if (!file.test_file) {
      corpus.eligible_method_count += static_cast<int>(file.methods.size());
    }
  }
  return corpus;
}

fs::path make_temp_dir(const std::string& tag) {
  static std::atomic<unsigned> counter{0};
  fs::path dir = fs::temp_directory_path() /
                 ("epit-" + tag + "-" + std::to_string(::getpid()) + "-" +
                  std::to_string(counter.fetch_add(1)));
  fs::create_directories(dir);
  return dir;
}

long oracle_count_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long count = 0;
  while (std::getline(in, line)) ++count;
  return count;
}

int oracle_member_paren_count(const std::vector<Token>& tokens) {
  int depth = 0;
  int count = 0;
  const Token* prev_significant = nullptr;
  for (const Token& t : tokens) {
    if (t.is_trivia() || t.kind == TokenKind::EndOfInput) continue;
    if (t.is(TokenKind::Punctuation, "{")) ++depth;
    if (t.is(TokenKind::Punctuation, "}")) --depth;
    if (t.is(TokenKind::Punctuation, "(") && prev_significant != nullptr &&
        prev_significant->kind == TokenKind::Identifier && depth == 1) {
      ++count;
    }
    prev_significant = &t;
  }
  return count;
}

std::vector<std::vector<std::size_t>> oracle_clone_partition(
    const std::vector<MethodRecord>& records) {
  const std::size_t n = records.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find =
      [&](std::size_t x) -> std::size_t {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (records[i].fingerprint.empty()) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (records[j].fingerprint.empty()) continue;
      if (records[i].normalized_body == records[j].normalized_body) {
        parent[find(i)] = find(j);
      }
    }
  }
  std::vector<std::vector<std::size_t>> sets(n);
  for (std::size_t i = 0; i < n; ++i) sets[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& s : sets) {
    if (!s.empty()) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

std::string mutate_text(const std::string& text, std::mt19937_64& rng) {
  std::string out = text;
  auto rand_size = [&](std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(0, hi)(rng);
  };
  int ops = 1 + static_cast<int>(rand_size(3));
  for (int i = 0; i < ops; ++i) {
    if (out.empty()) break;
    switch (rand_size(2)) {
      case 0: {  // flip a byte
        out[rand_size(out.size() - 1)] =
            static_cast<char>(32 + rand_size(94));
        break;
      }
      case 1: {  // delete a slice
        std::size_t start = rand_size(out.size() - 1);
        std::size_t len = 1 + rand_size(std::min<std::size_t>(40, out.size() - start - 1));
        out.erase(start, len);
        break;
      }
      default: {  // insert noise
        static const char* kNoise[] = {"{", "}", "(", ";", "/*", "\"", "'",
                                       "\\", "#", "@", "<", ">>"};
        out.insert(rand_size(out.size() - 1), kNoise[rand_size(11)]);
        break;
      }
    }
  }
  return out;
}

}  // namespace epit::testsupport
