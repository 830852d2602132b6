#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "spikeclust/clusterings.hpp"

namespace spikeclust {

struct KMeansParams {
  int max_iters = 300;
  double tol = 1e-6;  // converged when the max center shift drops below this
  int n_init = 10;
  std::uint64_t seed = 0;
  int threads = 1;
};

// Lloyd iterations from greedy k-means++ seeding, best of n_init restarts by
// distortion. Empty clusters are reseeded at the point farthest from its
// assigned center. Assignment ties and restart ties break to the lowest
// index, so results are deterministic and thread-count invariant.
HardClustering kmeans(const Eigen::MatrixXd& X, int K, const KMeansParams& params = {});

// Squared distances of every row to every center, computed blockwise.
Eigen::MatrixXd squared_distances_to(const Eigen::MatrixXd& X, const Eigen::MatrixXd& centers,
                                     int threads = 1);

}  // namespace spikeclust
