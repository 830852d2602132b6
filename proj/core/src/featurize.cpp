#include "spikeclust/featurize.hpp"

#include <cmath>

#include "spikeclust/common.hpp"
#include "spikeclust/parallel.hpp"

namespace spikeclust {

namespace {

// Dense 21^k columns; refuse k that would not fit a desk-scale dense matrix.
constexpr long kMaxColumns = 1L << 26;

long checked_dimension(int k, const Alphabet& alphabet) {
  if (k < 1) fail_arg(cat("k must be >= 1, got ", k));
  long d = 1;
  for (int i = 0; i < k; ++i) {
    d *= alphabet.size();
    if (d > kMaxColumns) {
      fail_arg(cat("k = ", k, " over a ", alphabet.size(),
                   "-symbol alphabet exceeds the dense column limit"));
    }
  }
  return d;
}

// Rolling lexicographic index over the window; returns the full count fill.
void fill_counts(std::string_view residues, int k, const Alphabet& alphabet,
                 double* counts, long d) {
  const long base = alphabet.size();
  const long high = d / base;  // |Sigma|^(k-1)
  long idx = 0;
  for (int i = 0; i < k; ++i) {
    idx = idx * base + alphabet.index_of(residues[static_cast<std::size_t>(i)]);
  }
  counts[idx] += 1.0;
  for (std::size_t i = static_cast<std::size_t>(k); i < residues.size(); ++i) {
    idx = (idx % high) * base + alphabet.index_of(residues[i]);
    counts[idx] += 1.0;
  }
}

void validate_residues(std::string_view residues, int k, const Alphabet& alphabet,
                       const std::string& who) {
  if (static_cast<std::size_t>(k) > residues.size()) {
    fail_arg(cat(who, "k = ", k, " exceeds sequence length ", residues.size()));
  }
  for (char c : residues) {
    if (!alphabet.contains(c)) {
      fail_arg(cat(who, "character '", c, "' not in alphabet ", alphabet.symbols()));
    }
  }
}

}  // namespace

std::vector<std::string> kmers_of(std::string_view residues, int k) {
  if (k < 1) fail_arg(cat("k must be >= 1, got ", k));
  if (static_cast<std::size_t>(k) > residues.size()) {
    fail_arg(cat("k = ", k, " exceeds sequence length ", residues.size()));
  }
  std::vector<std::string> out;
  out.reserve(residues.size() - static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= residues.size(); ++i) {
    out.emplace_back(residues.substr(i, static_cast<std::size_t>(k)));
  }
  return out;
}

long kmer_index(std::string_view kmer, const Alphabet& alphabet) {
  long idx = 0;
  for (char c : kmer) {
    const int p = alphabet.index_of(c);
    if (p < 0) return -1;
    idx = idx * alphabet.size() + p;
  }
  return idx;
}

Eigen::VectorXd count_vector(std::string_view residues, int k, const Alphabet& alphabet) {
  const long d = checked_dimension(k, alphabet);
  validate_residues(residues, k, alphabet, "");
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(d);
  fill_counts(residues, k, alphabet, counts.data(), d);
  return counts;
}

std::vector<std::string> kmer_column_ids(int k, const Alphabet& alphabet) {
  const long d = checked_dimension(k, alphabet);
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(d));
  std::string word(static_cast<std::size_t>(k), alphabet.symbol(0));
  std::vector<int> digits(static_cast<std::size_t>(k), 0);
  for (long i = 0; i < d; ++i) {
    ids.push_back(word);
    // increment base-|Sigma| counter, least-significant digit last
    for (int pos = k - 1; pos >= 0; --pos) {
      auto& dg = digits[static_cast<std::size_t>(pos)];
      if (++dg < alphabet.size()) {
        word[static_cast<std::size_t>(pos)] = alphabet.symbol(dg);
        break;
      }
      dg = 0;
      word[static_cast<std::size_t>(pos)] = alphabet.symbol(0);
    }
  }
  return ids;
}

FeatureMatrix featurize_dataset(const std::vector<SequenceRecord>& records, int k,
                                const Alphabet& alphabet, int threads) {
  const long d = checked_dimension(k, alphabet);
  for (const auto& r : records) {
    validate_residues(r.residues, k, alphabet, cat("record '", r.id, "': "));
  }

  FeatureMatrix m;
  m.k = k;
  m.column_ids = kmer_column_ids(k, alphabet);
  m.row_ids.reserve(records.size());
  for (const auto& r : records) m.row_ids.push_back(r.id);
  m.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(records.size()),
                                   static_cast<Eigen::Index>(d));

  // Rows are independent; each writes only its own slot.
  parallel_rows(records.size(), threads, [&](std::size_t i) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(d);
    fill_counts(records[i].residues, k, alphabet, row.data(), d);
    m.values.row(static_cast<Eigen::Index>(i)) = row.transpose();
  });
  return m;
}

FeatureMatrix l1_normalized(const FeatureMatrix& m) {
  m.check_consistent();
  FeatureMatrix out = m;
  out.k = 0;
  for (Eigen::Index i = 0; i < out.values.rows(); ++i) {
    const double s = out.values.row(i).lpNorm<1>();
    if (s > 0) out.values.row(i) /= s;
  }
  return out;
}

}  // namespace spikeclust
