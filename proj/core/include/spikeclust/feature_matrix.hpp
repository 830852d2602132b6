#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "spikeclust/alphabet.hpp"

namespace spikeclust {

// Dense n x d feature table with row/column identity. Raw k-mer matrices
// carry k > 0 and integer-valued entries whose rows sum to N_i - k + 1;
// derived matrices (projections, normalized counts) carry k = 0.
struct FeatureMatrix {
  Eigen::MatrixXd values;
  std::vector<std::string> row_ids;
  std::vector<std::string> column_ids;
  int k = 0;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }

  void check_consistent() const;

  // Column subset in the given index order; keeps row ids, drops k.
  FeatureMatrix select_columns(const std::vector<int>& indices) const;
};

// CSV layout: optional '#' comment lines, then `id,<col>,<col>,...`, one data
// row per sequence. Raw count matrices are written as integers, everything
// else with full double round-trip precision.
void write_feature_csv(const std::string& path, const FeatureMatrix& m,
                       const std::string& comment = "");

// Reads the format above. k is re-derived from the header: if every column id
// is a length-L word over the alphabet (same L), k = L, otherwise 0.
FeatureMatrix read_feature_csv(const std::string& path,
                               const Alphabet& alphabet = Alphabet::amino_acids());

}  // namespace spikeclust
