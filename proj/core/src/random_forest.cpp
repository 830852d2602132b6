#include "spikeclust/random_forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spikeclust/common.hpp"
#include "spikeclust/parallel.hpp"
#include "spikeclust/rng.hpp"

namespace spikeclust {

namespace {

double gini(const std::vector<int>& counts, int total) {
  if (total == 0) return 0.0;
  double sumsq = 0.0;
  for (int c : counts) {
    const double p = static_cast<double>(c) / total;
    sumsq += p * p;
  }
  return 1.0 - sumsq;
}

struct SplitChoice {
  bool found = false;
  int feature = -1;
  double threshold = 0;
  double decrease = 0;
};

struct TreeBuilder {
  const Eigen::MatrixXd& X;
  const std::vector<int>& y;
  int n_classes;
  const ForestParams& params;
  int mtry;
  std::mt19937_64 rng;
  DecisionTree tree;
  Eigen::VectorXd importance;  // raw decrease per feature

  // scratch
  std::vector<int> feature_pool;
  std::vector<std::pair<double, int>> sorted;  // (value, class)

  TreeBuilder(const Eigen::MatrixXd& X_, const std::vector<int>& y_, int n_classes_,
              const ForestParams& p_, int mtry_, std::mt19937_64 rng_)
      : X(X_), y(y_), n_classes(n_classes_), params(p_), mtry(mtry_), rng(std::move(rng_)) {
    feature_pool.resize(static_cast<std::size_t>(X.cols()));
    std::iota(feature_pool.begin(), feature_pool.end(), 0);
    importance = Eigen::VectorXd::Zero(X.cols());
  }

  SplitChoice best_split(const std::vector<int>& samples, const std::vector<int>& counts,
                         double node_gini) {
    // mtry distinct candidates, then sorted so equal decreases resolve to the
    // lowest feature index without extra bookkeeping.
    for (int i = 0; i < mtry; ++i) {
      std::uniform_int_distribution<int> pick(i, static_cast<int>(feature_pool.size()) - 1);
      std::swap(feature_pool[static_cast<std::size_t>(i)],
                feature_pool[static_cast<std::size_t>(pick(rng))]);
    }
    std::sort(feature_pool.begin(), feature_pool.begin() + mtry);

    const int n = static_cast<int>(samples.size());
    SplitChoice best;
    std::vector<int> left_counts(static_cast<std::size_t>(n_classes));
    for (int fi = 0; fi < mtry; ++fi) {
      const int f = feature_pool[static_cast<std::size_t>(fi)];
      sorted.clear();
      for (int s : samples) sorted.emplace_back(X(s, f), y[static_cast<std::size_t>(s)]);
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (sorted.front().first == sorted.back().first) continue;

      std::fill(left_counts.begin(), left_counts.end(), 0);
      int n_left = 0;
      for (int i = 0; i + 1 < n; ++i) {
        ++left_counts[static_cast<std::size_t>(sorted[static_cast<std::size_t>(i)].second)];
        ++n_left;
        const double v = sorted[static_cast<std::size_t>(i)].first;
        const double next = sorted[static_cast<std::size_t>(i + 1)].first;
        if (v == next) continue;
        const int n_right = n - n_left;
        if (n_left < params.min_leaf || n_right < params.min_leaf) continue;
        std::vector<int> right_counts(counts);
        for (int c = 0; c < n_classes; ++c) {
          right_counts[static_cast<std::size_t>(c)] -= left_counts[static_cast<std::size_t>(c)];
        }
        const double dec = n * node_gini - n_left * gini(left_counts, n_left) -
                           n_right * gini(right_counts, n_right);
        if (dec > best.decrease + 1e-12) {
          best.found = true;
          best.feature = f;
          best.threshold = 0.5 * (v + next);
          best.decrease = dec;
        }
      }
    }
    return best;
  }

  int grow(std::vector<int> samples, int depth) {
    std::vector<int> counts(static_cast<std::size_t>(n_classes));
    for (int s : samples) ++counts[static_cast<std::size_t>(y[static_cast<std::size_t>(s)])];
    const int n = static_cast<int>(samples.size());
    const double node_gini = gini(counts, n);

    const bool stop = node_gini == 0.0 || n < 2 * params.min_leaf ||
                      (params.max_depth >= 0 && depth >= params.max_depth);
    SplitChoice split;
    if (!stop) split = best_split(samples, counts, node_gini);

    const int node_id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    if (!split.found) {
      tree.nodes[static_cast<std::size_t>(node_id)].class_counts = std::move(counts);
      return node_id;
    }

    importance(split.feature) += split.decrease;
    std::vector<int> left, right;
    for (int s : samples) {
      if (X(s, split.feature) < split.threshold) {
        left.push_back(s);
      } else {
        right.push_back(s);
      }
    }
    samples.clear();
    samples.shrink_to_fit();
    const int l = grow(std::move(left), depth + 1);
    const int r = grow(std::move(right), depth + 1);
    auto& node = tree.nodes[static_cast<std::size_t>(node_id)];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return node_id;
  }
};

}  // namespace

ForestModel rf_fit(const Eigen::MatrixXd& X, const std::vector<int>& y,
                   const ForestParams& params) {
  const auto n = X.rows();
  const auto d = X.cols();
  if (n < 2) fail_arg("random forest needs at least 2 samples");
  if (static_cast<Eigen::Index>(y.size()) != n) {
    fail_arg(cat("random forest: ", n, " rows but ", y.size(), " labels"));
  }
  int n_classes = 0;
  for (int c : y) {
    if (c < 0) fail_arg("class labels must be non-negative");
    n_classes = std::max(n_classes, c + 1);
  }
  {
    std::vector<int> counts(static_cast<std::size_t>(n_classes));
    for (int c : y) ++counts[static_cast<std::size_t>(c)];
    int present = 0;
    for (int c : counts) present += c > 0;
    if (present < 2) fail_arg("random forest needs at least 2 distinct classes");
  }
  if (params.n_trees < 1) fail_arg("n_trees must be >= 1");
  if (params.min_leaf < 1) fail_arg("min_leaf must be >= 1");
  if (params.mtry > d) fail_arg(cat("mtry ", params.mtry, " exceeds ", d, " features"));
  const int mtry = params.mtry > 0
                       ? params.mtry
                       : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d))));

  ForestModel model;
  model.n_features = static_cast<int>(d);
  model.n_classes = n_classes;
  model.trees.resize(static_cast<std::size_t>(params.n_trees));
  std::vector<Eigen::VectorXd> raw(static_cast<std::size_t>(params.n_trees));

  parallel_chunks(static_cast<std::size_t>(params.n_trees), 1, params.threads,
                  [&](std::size_t t, std::size_t, std::size_t) {
                    auto rng = make_rng(params.seed, {0xf03e57, t});
                    std::vector<int> sample(static_cast<std::size_t>(n));
                    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
                    for (auto& s : sample) s = pick(rng);
                    TreeBuilder builder(X, y, n_classes, params, std::min<int>(mtry, static_cast<int>(d)),
                                        std::move(rng));
                    builder.grow(std::move(sample), 0);
                    model.trees[t] = std::move(builder.tree);
                    raw[t] = std::move(builder.importance);
                  });

  Eigen::VectorXd total = Eigen::VectorXd::Zero(d);
  for (const auto& r : raw) total += r;
  const double sum = total.sum();
  model.importances = sum > 0 ? Eigen::VectorXd(total / sum) : Eigen::VectorXd::Zero(d);
  return model;
}

Eigen::VectorXd rf_importances(const ForestModel& model) { return model.importances; }

std::vector<int> rf_predict(const ForestModel& model, const Eigen::MatrixXd& X) {
  if (X.cols() != model.n_features) {
    fail_arg(cat("forest expects ", model.n_features, " features, got ", X.cols()));
  }
  std::vector<int> out(static_cast<std::size_t>(X.rows()));
  std::vector<int> votes(static_cast<std::size_t>(model.n_classes));
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    std::fill(votes.begin(), votes.end(), 0);
    for (const auto& tree : model.trees) {
      int node = 0;
      for (;;) {
        const auto& nd = tree.nodes[static_cast<std::size_t>(node)];
        if (nd.feature < 0) {
          // vote with the leaf's majority class (lowest id wins ties)
          int best = 0;
          for (int c = 1; c < model.n_classes; ++c) {
            if (nd.class_counts[static_cast<std::size_t>(c)] >
                nd.class_counts[static_cast<std::size_t>(best)]) {
              best = c;
            }
          }
          ++votes[static_cast<std::size_t>(best)];
          break;
        }
        node = X(i, nd.feature) < nd.threshold ? nd.left : nd.right;
      }
    }
    int best = 0;
    for (int c = 1; c < model.n_classes; ++c) {
      if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(best)]) best = c;
    }
    out[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

}  // namespace spikeclust
