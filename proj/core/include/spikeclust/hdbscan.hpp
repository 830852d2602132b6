#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spikeclust/clusterings.hpp"

namespace spikeclust {

struct HdbscanParams {
  int min_cluster_size = 15;
  int min_samples = 0;  // 0 -> min_cluster_size
  int threads = 1;
};

struct WeightedEdge {
  int a = 0;
  int b = 0;
  double weight = 0;
};

// Distance to the min_samples-th nearest other point.
Eigen::VectorXd core_distances(const Eigen::MatrixXd& X, int min_samples, int threads = 1);

// Minimum spanning tree of the complete graph under the mutual reachability
// distance mr(a,b) = max(core(a), core(b), d(a,b)); Prim over the implicit
// graph. Exposed separately so the tree can be checked against a brute-force
// oracle.
std::vector<WeightedEdge> mutual_reachability_mst(const Eigen::MatrixXd& X, int min_samples,
                                                  int threads = 1);

// Full pipeline: core distances -> mutual reachability MST -> single-linkage
// tree -> condensed tree at min_cluster_size -> stability-maximizing flat
// clusters. Points under no selected cluster are noise (-1). The root is only
// selectable when the condensed tree has no other cluster (e.g. all points
// identical), matching the usual no-single-cluster convention otherwise.
DensityClustering hdbscan(const Eigen::MatrixXd& X, const HdbscanParams& params = {});

}  // namespace spikeclust
