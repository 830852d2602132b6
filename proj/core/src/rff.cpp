#include "spikeclust/rff.hpp"

#include <algorithm>
#include <cmath>

#include "spikeclust/common.hpp"
#include "spikeclust/parallel.hpp"
#include "spikeclust/rng.hpp"

namespace spikeclust {

RffModel rff_fit(int d, int D, double gamma, std::uint64_t seed) {
  if (d < 1) fail_arg(cat("input dimension must be >= 1, got ", d));
  if (D < 1) fail_arg(cat("target dimension must be >= 1, got ", D));
  if (!(gamma > 0)) fail_arg(cat("gamma must be positive, got ", gamma));

  RffModel m;
  m.gamma = gamma;
  m.input_dim = d;
  m.output_dim = D;
  m.seed = seed;

  auto rng = make_rng(seed, {0x4ff});
  std::normal_distribution<double> freq(0.0, std::sqrt(2.0 * gamma));
  std::uniform_real_distribution<double> offset(0.0, 2.0 * M_PI);

  m.W.resize(D, d);
  for (int i = 0; i < D; ++i) {
    for (int j = 0; j < d; ++j) m.W(i, j) = freq(rng);
  }
  m.b.resize(D);
  for (int i = 0; i < D; ++i) m.b(i) = offset(rng);
  return m;
}

Eigen::MatrixXd rff_transform_values(const RffModel& model, const Eigen::MatrixXd& X,
                                     int threads) {
  if (X.cols() != model.input_dim) {
    fail_arg(cat("RFF model expects ", model.input_dim, " columns, got ", X.cols()));
  }
  const double scale = std::sqrt(2.0 / model.output_dim);
  Eigen::MatrixXd Z(X.rows(), model.output_dim);
  parallel_chunks(static_cast<std::size_t>(X.rows()), kRowChunk, threads,
                  [&](std::size_t, std::size_t b, std::size_t e) {
                    const auto rows = static_cast<Eigen::Index>(e - b);
                    const auto off = static_cast<Eigen::Index>(b);
                    Eigen::MatrixXd proj =
                        X.middleRows(off, rows) * model.W.transpose();
                    proj.rowwise() += model.b.transpose();
                    Z.middleRows(off, rows) = scale * proj.array().cos().matrix();
                  });
  return Z;
}

FeatureMatrix rff_transform(const RffModel& model, const FeatureMatrix& X, int threads) {
  X.check_consistent();
  FeatureMatrix out;
  out.values = rff_transform_values(model, X.values, threads);
  out.row_ids = X.row_ids;
  out.column_ids.reserve(static_cast<std::size_t>(model.output_dim));
  for (int j = 0; j < model.output_dim; ++j) out.column_ids.push_back(cat("rff_", j));
  out.k = 0;
  return out;
}

double median_heuristic_gamma(const Eigen::MatrixXd& X, int max_pairs,
                              std::uint64_t seed) {
  const auto n = X.rows();
  if (n < 2) fail_arg("median heuristic needs at least 2 points");
  auto rng = make_rng(seed, {0x3ed1a2});
  std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(max_pairs));
  for (int t = 0; t < max_pairs; ++t) {
    const auto a = pick(rng);
    auto b = pick(rng);
    if (a == b) continue;
    dists.push_back((X.row(a) - X.row(b)).norm());
  }
  if (dists.empty()) fail("median heuristic sampled no distinct pairs");
  std::nth_element(dists.begin(), dists.begin() + static_cast<long>(dists.size() / 2),
                   dists.end());
  const double med = dists[dists.size() / 2];
  if (!(med > 0)) fail("median pairwise distance is zero; supply gamma explicitly");
  return 1.0 / (2.0 * med * med);
}

}  // namespace spikeclust
