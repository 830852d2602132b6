#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "spikeclust/feature_matrix.hpp"
#include "spikeclust/random_forest.hpp"

namespace spikeclust {

struct BorutaParams {
  int n_iters = 100;
  double level = 0.05;  // two-sided, Bonferroni-corrected over d
  ForestParams rf;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct BorutaResult {
  std::vector<int> accepted;   // sorted; disjoint from the other two
  std::vector<int> rejected;
  std::vector<int> tentative;
  std::vector<int> hit_counts;                  // per feature, <= n_iters
  std::vector<double> max_shadow_importance;    // per iteration
  int n_iters = 0;
};

// Shadow-feature wrapper selection: each iteration appends a row-permuted
// copy of every column (fresh permutations per column per iteration), fits
// the forest on the doubled matrix, and scores a hit for every real feature
// whose importance exceeds the best shadow importance. Hit counts are then
// tested two-sided against Binomial(n_iters, 1/2).
BorutaResult boruta_run(const Eigen::MatrixXd& X, const std::vector<int>& y,
                        const BorutaParams& params = {});

BorutaResult boruta_run(const FeatureMatrix& X, const std::vector<std::string>& labels,
                        const BorutaParams& params = {});

}  // namespace spikeclust
