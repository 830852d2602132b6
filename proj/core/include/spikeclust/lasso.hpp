#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "spikeclust/feature_matrix.hpp"

namespace spikeclust {

// L1-penalized least squares, objective (1/2n)||y - X b - b0||^2 + alpha*||b||_1,
// solved by cyclic coordinate descent with soft-thresholding on internally
// standardized columns. beta/intercept are reported on the original scale.
struct LassoModel {
  Eigen::VectorXd beta;
  double intercept = 0;
  double alpha = 0;
  int n_iters = 0;
  bool converged = false;
  // Objective of the standardized problem after each full sweep;
  // non-increasing by construction of the updates.
  std::vector<double> objective_history;
};

LassoModel lasso_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double alpha,
                     double tol = 1e-6, int max_iters = 1000);

// Smallest alpha that zeroes every coefficient: max_j |x~_j.(y - mean(y))| / n
// over standardized columns.
double lasso_alpha_max(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

struct LassoSelection {
  std::vector<int> selected;  // sorted union of nonzero coefficients
  std::vector<std::pair<std::string, int>> per_class_nonzeros;
};

// One-vs-rest selection: per class fit with y = +/-1 indicator, keep the
// union of features with nonzero coefficients. Requires >= 2 classes.
LassoSelection lasso_select(const Eigen::MatrixXd& X, const std::vector<std::string>& labels,
                            double alpha, double tol = 1e-4, int max_iters = 1000,
                            int threads = 1);

LassoSelection lasso_select(const FeatureMatrix& X, const std::vector<std::string>& labels,
                            double alpha, double tol = 1e-4, int max_iters = 1000,
                            int threads = 1);

}  // namespace spikeclust
