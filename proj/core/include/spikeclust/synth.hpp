#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spikeclust/seqio.hpp"

namespace spikeclust {

// One planted variant: fixed substitutions applied to the shared base
// sequence, then per-residue noise per generated sequence.
struct VariantSpec {
  std::string name;
  int n_sequences = 500;
  std::vector<std::pair<int, char>> mutations;  // position -> residue
  double noise_rate = 0.001;
};

struct SynthDataset {
  std::vector<SequenceRecord> records;  // variant label set on each record
  std::unordered_map<std::string, std::string> truth;
  std::string base;
  std::vector<std::pair<std::string, std::string>> consensus;  // name -> sequence
};

// The five stock variants with the S-gene mutation counts used throughout the
// tests: Alpha 8, Beta 9, Delta 8, Gamma 10, Epsilon 3. Epsilon's three
// substitutions make it the hardest variant to separate. Mutation positions
// are sampled (distinct across variants) from the seed.
std::vector<VariantSpec> default_variant_specs(int per_variant, int base_length,
                                               double noise_rate, std::uint64_t seed);

// One random base sequence over the alphabet minus 'X'; each variant applies
// its fixed mutations, then every sequence gets independent per-residue
// substitution noise. Two variants with identical consensus sequences are an
// error. Fully deterministic in the seed.
SynthDataset generate(int base_length, const std::vector<VariantSpec>& specs,
                      std::uint64_t seed);

}  // namespace spikeclust
