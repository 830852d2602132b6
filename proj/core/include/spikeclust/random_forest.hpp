#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace spikeclust {

struct ForestParams {
  int n_trees = 100;
  int max_depth = -1;  // unlimited
  int min_leaf = 1;
  int mtry = 0;  // 0 -> ceil(sqrt(d))
  std::uint64_t seed = 0;
  int threads = 1;
};

// CART node; leaves keep feature = -1 and the class-count vector.
struct TreeNode {
  int feature = -1;
  double threshold = 0;
  int left = -1;
  int right = -1;
  std::vector<int> class_counts;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  int n_features = 0;
  int n_classes = 0;
  // Mean over trees of total Gini impurity decrease per feature, normalized
  // to sum to 1 when any split exists (all-leaf forests keep the zero vector).
  Eigen::VectorXd importances;
};

// Gini CART forest on bootstrap samples; splits search mtry random candidate
// features with thresholds at midpoints of consecutive sorted unique values.
// Equal impurity decreases break to the lowest feature, then lowest
// threshold. Per-tree RNG streams are derived from (seed, tree index), so
// parallel growth never changes the model.
ForestModel rf_fit(const Eigen::MatrixXd& X, const std::vector<int>& y,
                   const ForestParams& params = {});

Eigen::VectorXd rf_importances(const ForestModel& model);

// Majority vote over trees; ties go to the lowest class id.
std::vector<int> rf_predict(const ForestModel& model, const Eigen::MatrixXd& X);

}  // namespace spikeclust
