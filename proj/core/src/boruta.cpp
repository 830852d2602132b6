#include "spikeclust/boruta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spikeclust/common.hpp"
#include "spikeclust/labels.hpp"
#include "spikeclust/rng.hpp"

namespace spikeclust {

namespace {

// Exact binomial tail probabilities for Bin(n, 1/2) via log factorials.
double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double upper_tail(int hits, int n) {  // P(X >= hits)
  double p = 0.0;
  for (int k = hits; k <= n; ++k) {
    p += std::exp(log_choose(n, k) - n * std::log(2.0));
  }
  return std::min(p, 1.0);
}

double lower_tail(int hits, int n) {  // P(X <= hits)
  double p = 0.0;
  for (int k = 0; k <= hits; ++k) {
    p += std::exp(log_choose(n, k) - n * std::log(2.0));
  }
  return std::min(p, 1.0);
}

}  // namespace

BorutaResult boruta_run(const Eigen::MatrixXd& X, const std::vector<int>& y,
                        const BorutaParams& params) {
  const auto n = X.rows();
  const auto d = X.cols();
  if (d < 1) fail_arg("boruta needs at least one feature");
  if (params.n_iters < 5) {
    fail_arg(cat("boruta needs at least 5 iterations for the binomial test, got ",
                 params.n_iters));
  }

  BorutaResult res;
  res.n_iters = params.n_iters;
  res.hit_counts.assign(static_cast<std::size_t>(d), 0);
  res.max_shadow_importance.reserve(static_cast<std::size_t>(params.n_iters));

  Eigen::MatrixXd augmented(n, 2 * d);
  augmented.leftCols(d) = X;
  std::vector<int> perm(static_cast<std::size_t>(n));

  for (int iter = 0; iter < params.n_iters; ++iter) {
    // Fresh shadow permutation per column per iteration.
    for (Eigen::Index j = 0; j < d; ++j) {
      auto rng = make_rng(params.seed, {0x51ad0, static_cast<std::uint64_t>(iter),
                                        static_cast<std::uint64_t>(j)});
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (Eigen::Index i = 0; i < n; ++i) {
        augmented(i, d + j) = X(perm[static_cast<std::size_t>(i)], j);
      }
    }

    ForestParams rf = params.rf;
    rf.seed = splitmix64(params.seed ^ (0xb04a7a00ULL + static_cast<std::uint64_t>(iter)));
    rf.threads = params.threads;
    const ForestModel forest = rf_fit(augmented, y, rf);
    const Eigen::VectorXd imp = forest.importances;

    const double shadow_max = imp.tail(d).maxCoeff();
    res.max_shadow_importance.push_back(shadow_max);
    for (Eigen::Index j = 0; j < d; ++j) {
      if (imp(j) > shadow_max) ++res.hit_counts[static_cast<std::size_t>(j)];
    }
  }

  // Two-sided decision at params.level with Bonferroni over d features.
  const double cutoff = params.level / 2.0 / static_cast<double>(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const int hits = res.hit_counts[static_cast<std::size_t>(j)];
    if (upper_tail(hits, params.n_iters) <= cutoff) {
      res.accepted.push_back(static_cast<int>(j));
    } else if (lower_tail(hits, params.n_iters) <= cutoff) {
      res.rejected.push_back(static_cast<int>(j));
    } else {
      res.tentative.push_back(static_cast<int>(j));
    }
  }
  return res;
}

BorutaResult boruta_run(const FeatureMatrix& X, const std::vector<std::string>& labels,
                        const BorutaParams& params) {
  X.check_consistent();
  if (static_cast<Eigen::Index>(labels.size()) != X.rows()) {
    fail_arg(cat("boruta: ", X.rows(), " rows but ", labels.size(), " labels"));
  }
  const EncodedLabels enc = encode_labels(labels);
  if (enc.classes.size() < 2) fail_arg("boruta needs at least two classes");
  return boruta_run(X.values, enc.y, params);
}

}  // namespace spikeclust
