#include "spikeclust/seqio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_set>

#include "spikeclust/common.hpp"

namespace spikeclust {

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_comment(const std::string& line) {
  return !line.empty() && (line[0] == ';' || line[0] == '#');
}

std::string header_token(const std::string& line) {
  std::size_t b = 1;
  while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
  std::size_t e = b;
  while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e]))) ++e;
  return line.substr(b, e - b);
}

}  // namespace

FastaData parse_fasta(const std::string& path, const ParsePolicy& policy,
                      const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) fail(cat("cannot open FASTA file '", path, "'"));

  FastaData out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::string id;
  std::string body;
  bool have_record = false;
  long line_no = 0;

  auto finish_record = [&] {
    if (!have_record) return;
    std::string residues;
    residues.reserve(body.size());
    for (char raw : body) {
      const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
      if (policy.gap_chars.find(c) != std::string::npos) {
        if (policy.gaps == GapPolicy::Strip) continue;
        fail(cat("record '", id, "': gap character '", c, "' (gap policy is error)"));
      }
      residues.push_back(c);
    }
    if (residues.empty()) fail(cat("record '", id, "' has no residues"));
    for (char c : residues) {
      if (!alphabet.contains(c)) {
        if (policy.drop_invalid) {
          out.dropped_ids.push_back(id);
          return;
        }
        fail(cat("record '", id, "': character '", c, "' not in alphabet ",
                 alphabet.symbols()));
      }
    }
    out.records.push_back(SequenceRecord{id, std::move(residues), std::nullopt});
  };

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty() || is_comment(line)) continue;
    if (line[0] == '>') {
      finish_record();
      id = header_token(line);
      if (id.empty()) fail(cat(path, ":", line_no, ": malformed FASTA header '", line, "'"));
      if (!seen.insert(id).second) fail(cat("duplicate sequence id '", id, "'"));
      body.clear();
      have_record = true;
    } else {
      if (!have_record) fail(cat(path, ":", line_no, ": sequence data before first '>' header"));
      body += line;
    }
  }
  finish_record();
  return out;
}

std::unordered_map<std::string, std::string> load_metadata(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(cat("cannot open metadata file '", path, "'"));

  std::unordered_map<std::string, std::string> map;
  std::string line;
  long line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      fail(cat(path, ":", line_no, ": malformed metadata row (expected id<TAB>variant)"));
    }
    std::string id = line.substr(0, tab);
    std::string variant = line.substr(tab + 1);
    if (id.empty() || variant.empty()) {
      fail(cat(path, ":", line_no, ": malformed metadata row (empty field)"));
    }
    if (first_row) {
      first_row = false;
      std::string lower = id;
      std::transform(lower.begin(), lower.end(), lower.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (lower == "id") continue;  // optional header row
    }
    auto [it, inserted] = map.emplace(id, variant);
    if (!inserted && it->second != variant) {
      fail(cat("metadata has conflicting variants for id '", id, "': '", it->second,
               "' vs '", variant, "'"));
    }
  }
  return map;
}

void attach_variants(std::vector<SequenceRecord>& records,
                     const std::unordered_map<std::string, std::string>& variants) {
  for (auto& r : records) {
    auto it = variants.find(r.id);
    r.variant = it == variants.end() ? std::nullopt : std::optional(it->second);
  }
}

void write_fasta(const std::string& path, std::span<const SequenceRecord> records,
                 const std::string& comment) {
  std::ofstream out(path);
  if (!out) fail(cat("cannot write FASTA file '", path, "'"));
  if (!comment.empty()) out << ';' << comment << '\n';
  constexpr std::size_t kWrap = 70;
  for (const auto& r : records) {
    out << '>' << r.id << '\n';
    for (std::size_t i = 0; i < r.residues.size(); i += kWrap) {
      out << r.residues.substr(i, kWrap) << '\n';
    }
  }
  if (!out) fail(cat("write failed for '", path, "'"));
}

void write_metadata(const std::string& path, std::span<const SequenceRecord> records,
                    const std::string& comment) {
  std::ofstream out(path);
  if (!out) fail(cat("cannot write metadata file '", path, "'"));
  if (!comment.empty()) out << '#' << comment << '\n';
  for (const auto& r : records) {
    if (r.variant) out << r.id << '\t' << *r.variant << '\n';
  }
  if (!out) fail(cat("write failed for '", path, "'"));
}

}  // namespace spikeclust
