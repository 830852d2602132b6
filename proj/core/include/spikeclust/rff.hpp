#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "spikeclust/feature_matrix.hpp"

namespace spikeclust {

// Random Fourier feature map for the Gaussian kernel exp(-gamma * ||x-y||^2):
// z(x) = sqrt(2/D) * cos(W x + b) with W ~ N(0, 2*gamma) and b ~ U[0, 2pi),
// so z(x).z(y) approximates the kernel.
struct RffModel {
  Eigen::MatrixXd W;  // D x d
  Eigen::VectorXd b;  // D
  double gamma = 0;
  int input_dim = 0;
  int output_dim = 0;
  std::uint64_t seed = 0;
};

RffModel rff_fit(int d, int D, double gamma, std::uint64_t seed);

Eigen::MatrixXd rff_transform_values(const RffModel& model, const Eigen::MatrixXd& X,
                                     int threads = 1);

// FeatureMatrix wrapper; output columns are named rff_0..rff_{D-1}, k = 0.
FeatureMatrix rff_transform(const RffModel& model, const FeatureMatrix& X,
                            int threads = 1);

// Median pairwise-distance heuristic: gamma = 1 / (2 * median^2), estimated
// from up to max_pairs sampled point pairs.
double median_heuristic_gamma(const Eigen::MatrixXd& X, int max_pairs,
                              std::uint64_t seed);

}  // namespace spikeclust
