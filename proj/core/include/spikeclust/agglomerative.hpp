#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "spikeclust/clusterings.hpp"

namespace spikeclust {

struct AggloParams {
  // O(n^2) distance storage; refuse larger inputs unless explicitly allowed.
  int max_points = 20000;
  bool allow_large = false;
  int threads = 1;
};

// Full merge tree via nearest-neighbor-chain with Lance-Williams updates
// (single / complete / average / ward on Euclidean distances; ward heights
// are reported on the Euclidean scale). Ties break to the smallest pair
// indices. The flat clustering is the K-cluster cut of the tree.
std::pair<Dendrogram, HardClustering> agglomerative(const Eigen::MatrixXd& X, int K,
                                                    Linkage linkage = Linkage::Ward,
                                                    const AggloParams& params = {});

// Labels after applying the first n-K merges; components are numbered by
// smallest member index.
std::vector<int> cut_dendrogram(const Dendrogram& dendrogram, int n_points, int K);

}  // namespace spikeclust
