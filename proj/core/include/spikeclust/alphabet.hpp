#pragma once

#include <array>
#include <string>
#include <string_view>

namespace spikeclust {

// Ordered residue alphabet. Feature column order is lexicographic over this
// symbol order, so the ordering is part of the file-format contract.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  // The 21 amino-acid symbols ACDEFGHIKLMNPQRSTVWXY ('X' = unknown residue,
  // counted like any other).
  static const Alphabet& amino_acids();

  int size() const { return static_cast<int>(symbols_.size()); }
  char symbol(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::string& symbols() const { return symbols_; }

  // Position of c in the alphabet, -1 when absent.
  int index_of(char c) const {
    return index_[static_cast<unsigned char>(c)];
  }
  bool contains(char c) const { return index_of(c) >= 0; }

 private:
  std::string symbols_;
  std::array<int, 256> index_{};
};

}  // namespace spikeclust
