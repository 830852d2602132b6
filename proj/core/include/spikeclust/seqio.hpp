#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "spikeclust/alphabet.hpp"

namespace spikeclust {

struct SequenceRecord {
  std::string id;
  std::string residues;
  std::optional<std::string> variant;

  bool operator==(const SequenceRecord&) const = default;
};

enum class GapPolicy {
  Strip,  // remove gap characters before validation (default; k-mer counting
          // runs on residue strings, not alignment columns)
  Error,  // any gap character is a hard error
};

struct ParsePolicy {
  GapPolicy gaps = GapPolicy::Strip;
  // When true, records with residues outside the alphabet (after gap
  // handling) are dropped and reported instead of failing the parse.
  bool drop_invalid = false;
  std::string gap_chars = "-.";
};

struct FastaData {
  std::vector<SequenceRecord> records;
  std::vector<std::string> dropped_ids;  // only filled with drop_invalid
};

// FASTA: '>' header lines followed by sequence lines. Lines starting with
// ';' or '#' are comments. Sequence is uppercased; header id is the first
// whitespace-delimited token. Ids must be unique, residues non-empty.
FastaData parse_fasta(const std::string& path, const ParsePolicy& policy = {},
                      const Alphabet& alphabet = Alphabet::amino_acids());

// Two-column `id<TAB>variant` file; '#' comments and blank lines skipped, an
// optional "id<TAB>variant" header row is ignored. Conflicting duplicate ids
// are an error.
std::unordered_map<std::string, std::string> load_metadata(const std::string& path);

// Sets record.variant from the map; ids absent from the map get nullopt.
void attach_variants(std::vector<SequenceRecord>& records,
                     const std::unordered_map<std::string, std::string>& variants);

// Writes records as FASTA, bodies wrapped at 70 columns. A non-empty comment
// is emitted first as a ';' line.
void write_fasta(const std::string& path, std::span<const SequenceRecord> records,
                 const std::string& comment = "");

// Writes `id<TAB>variant` rows (records without a variant are skipped). A
// non-empty comment is emitted first as a '#' line.
void write_metadata(const std::string& path, std::span<const SequenceRecord> records,
                    const std::string& comment = "");

}  // namespace spikeclust
