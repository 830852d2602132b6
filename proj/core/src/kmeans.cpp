#include "spikeclust/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spikeclust/common.hpp"
#include "spikeclust/parallel.hpp"
#include "spikeclust/rng.hpp"

namespace spikeclust {

namespace {

Eigen::VectorXd row_squared_norms(const Eigen::MatrixXd& X) {
  return X.rowwise().squaredNorm();
}

// Squared distances of each row in [b, e) to every center, written into D.
void fill_sq_dist_block(const Eigen::MatrixXd& X, const Eigen::VectorXd& x_norms,
                        const Eigen::MatrixXd& centers, const Eigen::VectorXd& c_norms,
                        std::size_t b, std::size_t e, Eigen::MatrixXd& D) {
  const auto off = static_cast<Eigen::Index>(b);
  const auto rows = static_cast<Eigen::Index>(e - b);
  D.middleRows(off, rows).noalias() = -2.0 * (X.middleRows(off, rows) * centers.transpose());
  D.middleRows(off, rows).colwise() += x_norms.segment(off, rows);
  D.middleRows(off, rows).rowwise() += c_norms.transpose();
  D.middleRows(off, rows) = D.middleRows(off, rows).cwiseMax(0.0);
}

struct AssignStats {
  std::vector<int> assignments;
  Eigen::VectorXd point_sq_dist;  // distance to the assigned center
  std::vector<long> counts;
  Eigen::MatrixXd sums;  // K x d member sums
  double distortion = 0;
};

// One assignment pass. Chunk grid and chunk-ordered reduction keep the result
// identical for every thread count.
AssignStats assign_points(const Eigen::MatrixXd& X, const Eigen::VectorXd& x_norms,
                          const Eigen::MatrixXd& centers, int threads, bool want_sums) {
  const auto n = X.rows();
  const auto d = X.cols();
  const auto K = centers.rows();
  const Eigen::VectorXd c_norms = row_squared_norms(centers);

  AssignStats st;
  st.assignments.assign(static_cast<std::size_t>(n), 0);
  st.point_sq_dist.resize(n);

  const std::size_t nchunks = chunk_count(static_cast<std::size_t>(n), kRowChunk);
  std::vector<double> chunk_distortion(nchunks, 0.0);
  std::vector<std::vector<long>> chunk_counts(nchunks);
  std::vector<Eigen::MatrixXd> chunk_sums;
  if (want_sums) chunk_sums.resize(nchunks);

  Eigen::MatrixXd D(n, K);
  parallel_chunks(static_cast<std::size_t>(n), kRowChunk, threads,
                  [&](std::size_t c, std::size_t b, std::size_t e) {
                    fill_sq_dist_block(X, x_norms, centers, c_norms, b, e, D);
                    auto& counts = chunk_counts[c];
                    counts.assign(static_cast<std::size_t>(K), 0);
                    Eigen::MatrixXd* sums = nullptr;
                    if (want_sums) {
                      chunk_sums[c] = Eigen::MatrixXd::Zero(K, d);
                      sums = &chunk_sums[c];
                    }
                    double dist = 0;
                    for (std::size_t i = b; i < e; ++i) {
                      const auto row = static_cast<Eigen::Index>(i);
                      int best = 0;
                      for (Eigen::Index k = 1; k < K; ++k) {
                        if (D(row, k) < D(row, best)) best = static_cast<int>(k);
                      }
                      st.assignments[i] = best;
                      st.point_sq_dist(row) = D(row, best);
                      dist += D(row, best);
                      ++counts[static_cast<std::size_t>(best)];
                      if (sums) sums->row(best) += X.row(row);
                    }
                    chunk_distortion[c] = dist;
                  });

  st.counts.assign(static_cast<std::size_t>(K), 0);
  if (want_sums) st.sums = Eigen::MatrixXd::Zero(K, d);
  for (std::size_t c = 0; c < nchunks; ++c) {
    st.distortion += chunk_distortion[c];
    for (Eigen::Index k = 0; k < K; ++k) {
      st.counts[static_cast<std::size_t>(k)] += chunk_counts[c][static_cast<std::size_t>(k)];
    }
    if (want_sums) st.sums += chunk_sums[c];
  }
  return st;
}

// Squared distance of every row to a single point, chunked.
Eigen::VectorXd sq_dist_to_point(const Eigen::MatrixXd& X, const Eigen::VectorXd& x_norms,
                                 Eigen::Index point, int threads) {
  Eigen::VectorXd out(X.rows());
  const Eigen::VectorXd p = X.row(point);
  const double p_norm = p.squaredNorm();
  parallel_chunks(static_cast<std::size_t>(X.rows()), kRowChunk, threads,
                  [&](std::size_t, std::size_t b, std::size_t e) {
                    const auto off = static_cast<Eigen::Index>(b);
                    const auto rows = static_cast<Eigen::Index>(e - b);
                    out.segment(off, rows).noalias() = -2.0 * (X.middleRows(off, rows) * p);
                    out.segment(off, rows).array() +=
                        x_norms.segment(off, rows).array() + p_norm;
                  });
  return out.cwiseMax(0.0);
}

// Greedy k-means++: candidates drawn proportional to current potential, the
// one that shrinks the potential most wins.
Eigen::MatrixXd kmeanspp_centers(const Eigen::MatrixXd& X, const Eigen::VectorXd& x_norms,
                                 int K, std::mt19937_64& rng, int threads) {
  const auto n = X.rows();
  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  std::vector<Eigen::Index> picks;
  picks.reserve(static_cast<std::size_t>(K));

  std::uniform_int_distribution<Eigen::Index> uniform(0, n - 1);
  Eigen::Index first = uniform(rng);
  picks.push_back(first);
  chosen[static_cast<std::size_t>(first)] = 1;
  Eigen::VectorXd d2 = sq_dist_to_point(X, x_norms, first, threads);

  const int trials = 2 + static_cast<int>(std::log(static_cast<double>(K)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto lowest_unchosen = [&]() -> Eigen::Index {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!chosen[static_cast<std::size_t>(i)]) return i;
    }
    return 0;
  };

  for (int k = 1; k < K; ++k) {
    const double total = d2.sum();
    Eigen::Index best_pick = -1;
    Eigen::VectorXd best_d2;
    double best_potential = std::numeric_limits<double>::infinity();
    if (total <= 0) {
      // all remaining mass is zero (duplicate points); take the lowest
      // unchosen index so K = n still yields K distinct slots
      best_pick = lowest_unchosen();
      best_d2 = d2.cwiseMin(sq_dist_to_point(X, x_norms, best_pick, threads));
    } else {
      for (int t = 0; t < trials; ++t) {
        const double target = unit(rng) * total;
        double acc = 0;
        Eigen::Index cand = n - 1;
        for (Eigen::Index i = 0; i < n; ++i) {
          acc += d2(i);
          if (acc >= target) {
            cand = i;
            break;
          }
        }
        Eigen::VectorXd cand_d2 =
            d2.cwiseMin(sq_dist_to_point(X, x_norms, cand, threads));
        const double potential = cand_d2.sum();
        if (potential < best_potential) {
          best_potential = potential;
          best_pick = cand;
          best_d2 = std::move(cand_d2);
        }
      }
    }
    picks.push_back(best_pick);
    chosen[static_cast<std::size_t>(best_pick)] = 1;
    d2 = std::move(best_d2);
  }

  Eigen::MatrixXd centers(K, X.cols());
  for (int k = 0; k < K; ++k) centers.row(k) = X.row(picks[static_cast<std::size_t>(k)]);
  return centers;
}

HardClustering lloyd_run(const Eigen::MatrixXd& X, const Eigen::VectorXd& x_norms, int K,
                         const KMeansParams& params, std::mt19937_64 rng) {
  const auto n = X.rows();
  Eigen::MatrixXd centers = kmeanspp_centers(X, x_norms, K, rng, params.threads);

  HardClustering result;
  result.seed = params.seed;
  for (int iter = 0; iter < params.max_iters; ++iter) {
    AssignStats st = assign_points(X, x_norms, centers, params.threads, true);
    result.objective_history.push_back(st.distortion);
    result.iterations = iter + 1;

    // Means of non-empty clusters; empty ones reseed at the farthest point.
    Eigen::MatrixXd next(K, X.cols());
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < K; ++k) {
      if (st.counts[static_cast<std::size_t>(k)] > 0) {
        next.row(k) = st.sums.row(k) / static_cast<double>(st.counts[static_cast<std::size_t>(k)]);
      } else {
        Eigen::Index far = -1;
        double far_d = -1;
        for (Eigen::Index i = 0; i < n; ++i) {
          if (!taken[static_cast<std::size_t>(i)] && st.point_sq_dist(i) > far_d) {
            far_d = st.point_sq_dist(i);
            far = i;
          }
        }
        taken[static_cast<std::size_t>(far)] = 1;
        next.row(k) = X.row(far);
      }
    }

    const double shift = (next - centers).rowwise().norm().maxCoeff();
    centers = std::move(next);
    if (shift < params.tol) break;
  }

  // Sync assignments and distortion with the final centers.
  AssignStats st = assign_points(X, x_norms, centers, params.threads, false);
  result.objective_history.push_back(st.distortion);
  result.assignments = std::move(st.assignments);
  result.centers = std::move(centers);
  result.distortion = st.distortion;
  return result;
}

}  // namespace

Eigen::MatrixXd squared_distances_to(const Eigen::MatrixXd& X, const Eigen::MatrixXd& centers,
                                     int threads) {
  if (X.cols() != centers.cols()) {
    fail_arg(cat("dimension mismatch: points have ", X.cols(), " columns, centers ",
                 centers.cols()));
  }
  const Eigen::VectorXd x_norms = row_squared_norms(X);
  const Eigen::VectorXd c_norms = row_squared_norms(centers);
  Eigen::MatrixXd D(X.rows(), centers.rows());
  parallel_chunks(static_cast<std::size_t>(X.rows()), kRowChunk, threads,
                  [&](std::size_t, std::size_t b, std::size_t e) {
                    fill_sq_dist_block(X, x_norms, centers, c_norms, b, e, D);
                  });
  return D;
}

HardClustering kmeans(const Eigen::MatrixXd& X, int K, const KMeansParams& params) {
  const auto n = X.rows();
  if (K < 1) fail_arg(cat("K must be >= 1, got ", K));
  if (K > n) fail_arg(cat("K = ", K, " exceeds the number of points ", n));
  if (params.n_init < 1) fail_arg("n_init must be >= 1");
  if (!X.allFinite()) fail_arg("k-means input contains non-finite values");

  const Eigen::VectorXd x_norms = row_squared_norms(X);
  HardClustering best;
  bool have = false;
  for (int init = 0; init < params.n_init; ++init) {
    auto rng = make_rng(params.seed, {0x43a5, static_cast<std::uint64_t>(init)});
    HardClustering run = lloyd_run(X, x_norms, K, params, std::move(rng));
    if (!have || run.distortion < best.distortion) {
      best = std::move(run);
      have = true;
    }
  }
  return best;
}

}  // namespace spikeclust
