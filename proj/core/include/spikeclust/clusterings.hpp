#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace spikeclust {

// Partition result of k-means / k-modes / flat dendrogram cuts. `distortion`
// is the algorithm's objective: summed squared distances for k-means and
// cuts, total matching dissimilarity for k-modes.
struct HardClustering {
  std::vector<int> assignments;  // n values in [0, K)
  Eigen::MatrixXd centers;       // K x d centroids or modes
  double distortion = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
  // Objective after each iteration of the winning run; non-increasing.
  std::vector<double> objective_history;

  int k() const { return static_cast<int>(centers.rows()); }
};

struct FuzzyClustering {
  Eigen::MatrixXd membership;  // n x K, each row sums to 1
  Eigen::MatrixXd centers;     // K x d
  double fuzzifier = 2.0;
  double objective = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
  std::vector<double> objective_history;

  std::vector<int> hard_assignments() const;  // row argmax, ties to lowest id
};

// HDBSCAN result: a partition plus noise (-1) with per-point membership
// scores from the condensed-tree lambda values, normalized per cluster.
struct DensityClustering {
  std::vector<int> labels;
  std::vector<double> membership_score;  // in [0,1], exactly 0 for noise
  struct CondensedCluster {
    int id = 0;
    int parent = -1;
    double lambda_birth = 0;
    double lambda_death = 0;
    int size = 0;
    double stability = 0;
    bool selected = false;
  };
  std::vector<CondensedCluster> condensed;
  int min_cluster_size = 0;
  int min_samples = 0;

  int n_clusters() const;
};

enum class Linkage { Single, Complete, Average, Ward };

struct Dendrogram {
  // Nodes follow the usual convention: leaves are 0..n-1, merge t creates
  // node n+t. Distances are non-decreasing for these monotone linkages.
  struct Merge {
    int left = 0;
    int right = 0;
    double distance = 0;
    int size = 0;
  };
  std::vector<Merge> merges;  // n-1 entries
  Linkage linkage = Linkage::Ward;
};

const char* linkage_name(Linkage l);
Linkage linkage_from_name(const std::string& name);

}  // namespace spikeclust
