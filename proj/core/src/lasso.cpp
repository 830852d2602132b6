#include "spikeclust/lasso.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "spikeclust/common.hpp"
#include "spikeclust/labels.hpp"
#include "spikeclust/parallel.hpp"

namespace spikeclust {

namespace {

double soft_threshold(double z, double alpha) {
  if (z > alpha) return z - alpha;
  if (z < -alpha) return z + alpha;
  return 0.0;
}

struct Standardized {
  Eigen::MatrixXd X;      // standardized columns; constant columns zeroed
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;  // population std; 0 marks a constant column
};

Standardized standardize(const Eigen::MatrixXd& X) {
  const double n = static_cast<double>(X.rows());
  Standardized s;
  s.mean = X.colwise().mean();
  s.X = X.rowwise() - s.mean.transpose();
  s.scale = (s.X.colwise().squaredNorm() / n).cwiseSqrt();
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    if (s.scale(j) > 0) {
      s.X.col(j) /= s.scale(j);
    } else {
      s.X.col(j).setZero();
    }
  }
  return s;
}

struct StandardizedFit {
  Eigen::VectorXd beta;  // standardized scale
  int n_iters = 0;
  bool converged = false;
  std::vector<double> objective_history;
};

// Cyclic coordinate descent; standardized columns satisfy ||x_j||^2 = n, so
// each coordinate update is a plain soft-threshold.
StandardizedFit fit_standardized(const Standardized& s, const Eigen::VectorXd& y,
                                 double alpha, double tol, int max_iters) {
  const auto n_rows = s.X.rows();
  const auto d = s.X.cols();
  const double n = static_cast<double>(n_rows);

  StandardizedFit fit;
  fit.beta = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd r = y.array() - y.mean();

  for (int sweep = 0; sweep < max_iters; ++sweep) {
    double max_change = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (s.scale(j) == 0) continue;
      const double old = fit.beta(j);
      const double rho = s.X.col(j).dot(r) / n + old;
      const double next = soft_threshold(rho, alpha);
      if (next != old) {
        r -= s.X.col(j) * (next - old);
        fit.beta(j) = next;
        max_change = std::max(max_change, std::abs(next - old));
      }
    }
    fit.n_iters = sweep + 1;
    fit.objective_history.push_back(r.squaredNorm() / (2.0 * n) +
                                    alpha * fit.beta.lpNorm<1>());
    if (max_change < tol) {
      fit.converged = true;
      break;
    }
  }
  return fit;
}

void check_finite(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  if (!X.allFinite()) fail_arg("lasso design matrix contains non-finite values");
  if (!y.allFinite()) fail_arg("lasso targets contain non-finite values");
}

}  // namespace

LassoModel lasso_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double alpha,
                     double tol, int max_iters) {
  if (X.rows() < 1) fail_arg("lasso needs at least one row");
  if (y.size() != X.rows()) {
    fail_arg(cat("lasso: ", X.rows(), " rows but ", y.size(), " targets"));
  }
  if (alpha < 0) fail_arg(cat("alpha must be >= 0, got ", alpha));
  check_finite(X, y);

  const Standardized s = standardize(X);
  const StandardizedFit fit = fit_standardized(s, y, alpha, tol, max_iters);

  LassoModel m;
  m.alpha = alpha;
  m.n_iters = fit.n_iters;
  m.converged = fit.converged;
  m.objective_history = fit.objective_history;
  m.beta = Eigen::VectorXd::Zero(X.cols());
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    if (s.scale(j) > 0) m.beta(j) = fit.beta(j) / s.scale(j);
  }
  m.intercept = y.mean() - m.beta.dot(s.mean);
  return m;
}

double lasso_alpha_max(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  check_finite(X, y);
  const Standardized s = standardize(X);
  const Eigen::VectorXd yc = y.array() - y.mean();
  return (s.X.transpose() * yc).cwiseAbs().maxCoeff() / static_cast<double>(X.rows());
}

LassoSelection lasso_select(const Eigen::MatrixXd& X, const std::vector<std::string>& labels,
                            double alpha, double tol, int max_iters, int threads) {
  if (static_cast<Eigen::Index>(labels.size()) != X.rows()) {
    fail_arg(cat("lasso_select: ", X.rows(), " rows but ", labels.size(), " labels"));
  }
  const EncodedLabels enc = encode_labels(labels);
  if (enc.classes.size() < 2) fail_arg("lasso_select needs at least two classes");
  if (!X.allFinite()) fail_arg("lasso design matrix contains non-finite values");

  const Standardized s = standardize(X);
  std::vector<StandardizedFit> fits(enc.classes.size());
  parallel_chunks(enc.classes.size(), 1, threads,
                  [&](std::size_t c, std::size_t, std::size_t) {
                    Eigen::VectorXd y(X.rows());
                    for (Eigen::Index i = 0; i < X.rows(); ++i) {
                      y(i) = enc.y[static_cast<std::size_t>(i)] == static_cast<int>(c)
                                 ? 1.0
                                 : -1.0;
                    }
                    fits[c] = fit_standardized(s, y, alpha, tol, max_iters);
                  });

  LassoSelection sel;
  std::set<int> chosen;
  for (std::size_t c = 0; c < fits.size(); ++c) {
    int nonzeros = 0;
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      if (fits[c].beta(j) != 0.0) {
        ++nonzeros;
        chosen.insert(static_cast<int>(j));
      }
    }
    sel.per_class_nonzeros.emplace_back(enc.classes[c], nonzeros);
  }
  sel.selected.assign(chosen.begin(), chosen.end());
  return sel;
}

LassoSelection lasso_select(const FeatureMatrix& X, const std::vector<std::string>& labels,
                            double alpha, double tol, int max_iters, int threads) {
  X.check_consistent();
  return lasso_select(X.values, labels, alpha, tol, max_iters, threads);
}

}  // namespace spikeclust
