#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "spikeclust/alphabet.hpp"
#include "spikeclust/feature_matrix.hpp"
#include "spikeclust/seqio.hpp"

namespace spikeclust {

// All N - k + 1 length-k substrings in left-to-right order, duplicates
// preserved. k > N is an error, not an empty list.
std::vector<std::string> kmers_of(std::string_view residues, int k);

// Count vector of length |alphabet|^k; the entry for each k-mer sits at its
// lexicographic index in alphabet-symbol order. Sums to N - k + 1.
Eigen::VectorXd count_vector(std::string_view residues, int k, const Alphabet& alphabet);

// All |alphabet|^k k-mer strings in lexicographic order (the column ids of a
// raw count matrix).
std::vector<std::string> kmer_column_ids(int k, const Alphabet& alphabet);

// Lexicographic column index of one k-mer; -1 if any character is absent.
long kmer_index(std::string_view kmer, const Alphabet& alphabet);

// Row i = count_vector of record i. Validates every record up front (errors
// name the record id), then fills rows in parallel; output is identical for
// every thread count.
FeatureMatrix featurize_dataset(const std::vector<SequenceRecord>& records, int k,
                                const Alphabet& alphabet = Alphabet::amino_acids(),
                                int threads = 1);

// Per-row L1 normalization (off by default everywhere; counts are the
// canonical representation). Result carries k = 0.
FeatureMatrix l1_normalized(const FeatureMatrix& m);

}  // namespace spikeclust
