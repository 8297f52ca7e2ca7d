#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epit/model.hpp"
#include "epit/token.hpp"

namespace epit {

// Strips trivia from a method body span and, at Type2, renames identifiers
// to positional placeholders (ID1, ID2, ... in first-occurrence order) and
// collapses numeric, string and char literals to LIT.
std::vector<std::string> normalize_body(std::span<const Token> body,
                                        CloneLevel level);

// Stable 64-bit FNV-1a over the normalized sequence. Not assumed
// collision-free: grouping always confirms equality on the sequences.
std::uint64_t sequence_digest(std::span<const std::string> seq);
std::string digest_hex(std::uint64_t digest);

Fingerprint fingerprint_body(std::span<const Token> body, CloneLevel level);

// One equivalence class of methods with identical normalized bodies.
// Indices refer to the record list handed to detect_clone_groups.
struct CloneGroup {
  std::vector<std::size_t> members;  // ordered by (file_path, start_line)
  std::size_t representative = 0;    // == members.front()
};

// Partitions `records` by normalized-body equality. Bodiless methods (empty
// fingerprint) are not grouped with anything and come out as singletons.
// Records must carry fingerprints computed at `level`. Group order follows
// the representative's (file_path, start_line).
std::vector<CloneGroup> detect_clone_groups(
    const std::vector<MethodRecord>& records, CloneLevel level);

std::vector<MethodRecord> select_representatives(
    const std::vector<MethodRecord>& records,
    const std::vector<CloneGroup>& groups);

}  // namespace epit
