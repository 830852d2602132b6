#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "spikeclust/clusterings.hpp"

namespace spikeclust {

struct FuzzyParams {
  double m = 2.0;  // fuzzifier, > 1
  int max_iters = 300;
  double tol = 1e-5;  // converged when max |delta U| drops below this
  std::uint64_t seed = 0;
  int threads = 1;
};

// Alternating optimization of J = sum_ij u_ij^m ||x_i - c_j||^2: center
// update c_j = sum u^m x / sum u^m, membership update u_ij proportional to
// d_ij^(-2/(m-1)). A point coincident with a center gets membership 1 there.
// J is non-increasing across iterations.
FuzzyClustering fuzzy_cmeans(const Eigen::MatrixXd& X, int K, const FuzzyParams& params = {});

}  // namespace spikeclust
