#include "epit/clones.hpp"

#include <algorithm>
#include <unordered_map>

namespace epit {

namespace {

bool is_literal(TokenKind kind) {
  return kind == TokenKind::IntegerLiteral || kind == TokenKind::FloatLiteral ||
         kind == TokenKind::StringLiteral || kind == TokenKind::CharLiteral;
}

// (file_path, start_line) with the record's position as a final tie-break,
// so ordering stays total even for same-line methods.
struct RecordOrder {
  const std::vector<MethodRecord>* records;
  bool operator()(std::size_t a, std::size_t b) const {
    const MethodRecord& ra = (*records)[a];
    const MethodRecord& rb = (*records)[b];
    if (ra.file_path != rb.file_path) return ra.file_path < rb.file_path;
    if (ra.start_line != rb.start_line) return ra.start_line < rb.start_line;
    return a < b;
  }
};

}  // namespace

std::vector<std::string> normalize_body(std::span<const Token> body,
                                        CloneLevel level) {
  std::vector<std::string> out;
  out.reserve(body.size());
  std::unordered_map<std::string, std::string> rename;
  for (const Token& t : body) {
    if (t.is_trivia() || t.kind == TokenKind::EndOfInput) continue;
    if (level == CloneLevel::Type2) {
      if (t.kind == TokenKind::Identifier) {
        auto [it, inserted] = rename.emplace(
            t.lexeme, "ID" + std::to_string(rename.size() + 1));
        out.push_back(it->second);
        continue;
      }
      if (is_literal(t.kind)) {
        out.emplace_back("LIT");
        continue;
      }
    }
    out.push_back(t.lexeme);
  }
  return out;
}

std::uint64_t sequence_digest(std::span<const std::string> seq) {
  // FNV-1a, 64-bit; a separator byte keeps ["ab","c"] and ["a","bc"] apart.
  std::uint64_t h = 14695981039346656037ULL;
  constexpr std::uint64_t kPrime = 1099511628211ULL;
  for (const std::string& s : seq) {
    for (unsigned char c : s) {
      h ^= c;
      h *= kPrime;
    }
    h ^= 0x1F;
    h *= kPrime;
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[digest & 0xF];
    digest >>= 4;
  }
  return out;
}

Fingerprint fingerprint_body(std::span<const Token> body, CloneLevel level) {
  Fingerprint fp;
  fp.level = level;
  if (body.empty()) return fp;  // bodiless: empty digest
  std::vector<std::string> seq = normalize_body(body, level);
  fp.token_count = seq.size();
  fp.digest = digest_hex(sequence_digest(seq));
  return fp;
}

std::vector<CloneGroup> detect_clone_groups(
    const std::vector<MethodRecord>& records, CloneLevel level) {
  (void)level;  // records carry fingerprints computed at this level
  RecordOrder order{&records};

  // Bucket by digest, then split buckets on the actual sequences so a hash
  // collision can never merge two distinct bodies.
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  std::vector<CloneGroup> groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].fingerprint.empty()) {
      groups.push_back({{i}, i});  // bodiless methods are never grouped
    } else {
      buckets[records[i].fingerprint.digest].push_back(i);
    }
  }
  for (auto& [digest, members] : buckets) {
    std::sort(members.begin(), members.end(), order);
    std::vector<bool> taken(members.size(), false);
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (taken[a]) continue;
      CloneGroup group;
      group.members.push_back(members[a]);
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!taken[b] && records[members[a]].normalized_body ==
                             records[members[b]].normalized_body) {
          taken[b] = true;
          group.members.push_back(members[b]);
        }
      }
      group.representative = group.members.front();
      groups.push_back(std::move(group));
    }
  }
  std::sort(groups.begin(), groups.end(),
            [&](const CloneGroup& a, const CloneGroup& b) {
              return order(a.representative, b.representative);
            });
  return groups;
}

std::vector<MethodRecord> select_representatives(
    const std::vector<MethodRecord>& records,
    const std::vector<CloneGroup>& groups) {
  std::vector<MethodRecord> out;
  out.reserve(groups.size());
  for (const CloneGroup& g : groups) out.push_back(records[g.representative]);
  return out;
}

}  // namespace epit
