#pragma once

// Shared test utilities: synthetic Java project generation with seeded
// randomness, plus the independent oracles the suites compare against.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "epit/model.hpp"
#include "epit/token.hpp"

namespace epit::testsupport {

struct CorpusOptions {
  std::uint64_t seed = 1;
  int file_count = 3;
  int min_methods_per_file = 1;
  int max_methods_per_file = 5;
  int type1_duplicates = 0;  // exact body copies of earlier methods
  int type2_duplicates = 0;  // renamed copies of earlier methods
  bool with_test_file = false;
  int pad_lines_per_file = 0;  // trailing comment lines to inflate LOC
};

struct GeneratedCorpus {
  std::filesystem::path root;
  int eligible_method_count = 0;  // methods outside *Test.java files
  int total_method_count = 0;
  std::vector<std::filesystem::path> files;
};

// Writes a compilable-looking Java tree under `root` (created if needed).
GeneratedCorpus generate_corpus(const std::filesystem::path& root,
                                const CorpusOptions& options);

// Fresh unique directory under the system temp dir; caller removes it.
std::filesystem::path make_temp_dir(const std::string& tag);

// Independent line counter (getline-based, unlike count_loc's newline
// arithmetic).
long oracle_count_lines(const std::string& text);

// Counts `identifier (` pairs at member nesting depth in a token stream.
// Valid for sources whose member-level constructs are only methods,
// constructors and call-free fields.
int oracle_member_paren_count(const std::vector<Token>& tokens);

// O(n^2) clone partition: transitive closure of pairwise normalized-body
// equality, bodiless methods kept apart as singletons. Returns, for each
// record index, the set it belongs to (sets sorted by smallest member).
std::vector<std::vector<std::size_t>> oracle_clone_partition(
    const std::vector<MethodRecord>& records);

// Default-seeded RNG helpers for fuzzing.
std::string mutate_text(const std::string& text, std::mt19937_64& rng);

}  // namespace epit::testsupport
