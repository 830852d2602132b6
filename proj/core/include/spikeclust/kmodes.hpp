#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "spikeclust/clusterings.hpp"

namespace spikeclust {

struct KModesParams {
  int max_iters = 100;
  int n_init = 10;
  std::uint64_t seed = 0;
  int threads = 1;
};

// k-modes over columns treated as categorical symbols (exact value match;
// integer count vectors qualify). Distance is the simple matching
// dissimilarity (number of mismatched columns), centers are per-column modes
// with ties to the smallest value. `distortion` holds the total matching
// cost, which is non-increasing per iteration.
HardClustering kmodes(const Eigen::MatrixXd& X, int K, const KModesParams& params = {});

}  // namespace spikeclust
