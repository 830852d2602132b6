#include "spikeclust/kmodes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "spikeclust/common.hpp"
#include "spikeclust/parallel.hpp"
#include "spikeclust/rng.hpp"

namespace spikeclust {

namespace {

int matching_distance(const Eigen::MatrixXd& X, Eigen::Index row,
                      const Eigen::MatrixXd& modes, Eigen::Index k) {
  int mism = 0;
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    mism += X(row, j) != modes(k, j);
  }
  return mism;
}

struct Assignment {
  std::vector<int> assignments;
  std::vector<int> point_cost;  // mismatches to the assigned mode
  std::vector<long> counts;
  double cost = 0;
};

Assignment assign_points(const Eigen::MatrixXd& X, const Eigen::MatrixXd& modes,
                         int threads) {
  const auto n = X.rows();
  const auto K = modes.rows();
  Assignment st;
  st.assignments.assign(static_cast<std::size_t>(n), 0);
  st.point_cost.assign(static_cast<std::size_t>(n), 0);

  const std::size_t nchunks = chunk_count(static_cast<std::size_t>(n), kRowChunk);
  std::vector<double> chunk_cost(nchunks, 0.0);
  parallel_chunks(static_cast<std::size_t>(n), kRowChunk, threads,
                  [&](std::size_t c, std::size_t b, std::size_t e) {
                    double cost = 0;
                    for (std::size_t i = b; i < e; ++i) {
                      const auto row = static_cast<Eigen::Index>(i);
                      int best = 0;
                      int best_d = matching_distance(X, row, modes, 0);
                      for (Eigen::Index k = 1; k < K; ++k) {
                        const int d = matching_distance(X, row, modes, k);
                        if (d < best_d) {
                          best_d = d;
                          best = static_cast<int>(k);
                        }
                      }
                      st.assignments[i] = best;
                      st.point_cost[i] = best_d;
                      cost += best_d;
                    }
                    chunk_cost[c] = cost;
                  });

  st.counts.assign(static_cast<std::size_t>(K), 0);
  for (int a : st.assignments) ++st.counts[static_cast<std::size_t>(a)];
  for (std::size_t c = 0; c < nchunks; ++c) st.cost += chunk_cost[c];
  return st;
}

// Per-column most frequent value among members; count ties break to the
// smallest value. A dense tally fast path covers small non-negative integer
// data (k-mer counts); anything else falls back to an ordered map.
void column_modes(const Eigen::MatrixXd& X, const std::vector<int>& assignments,
                  const std::vector<long>& counts, Eigen::MatrixXd& modes, int threads) {
  const auto K = modes.rows();
  const auto d = X.cols();

  constexpr double kDenseLimit = 1 << 20;
  bool dense_ok = true;
  double max_v = 0;
  for (Eigen::Index i = 0; i < X.size() && dense_ok; ++i) {
    const double v = X.data()[i];
    dense_ok = v >= 0 && v < kDenseLimit && v == std::floor(v);
    max_v = std::max(max_v, v);
  }

  std::vector<std::vector<Eigen::Index>> members(static_cast<std::size_t>(K));
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    members[static_cast<std::size_t>(assignments[static_cast<std::size_t>(i)])].push_back(i);
  }

  if (dense_ok) {
    const int width = static_cast<int>(max_v) + 1;
    // one (cluster, column) cell per task; tally resets touch only used slots
    parallel_chunks(static_cast<std::size_t>(K * d), static_cast<std::size_t>(d), threads,
                    [&](std::size_t, std::size_t b, std::size_t e) {
                      std::vector<int> tally(static_cast<std::size_t>(width), 0);
                      std::vector<int> touched;
                      for (std::size_t cell = b; cell < e; ++cell) {
                        const auto k = static_cast<Eigen::Index>(cell / static_cast<std::size_t>(d));
                        const auto j = static_cast<Eigen::Index>(cell % static_cast<std::size_t>(d));
                        if (counts[static_cast<std::size_t>(k)] == 0) continue;
                        touched.clear();
                        for (Eigen::Index i : members[static_cast<std::size_t>(k)]) {
                          const int v = static_cast<int>(X(i, j));
                          if (tally[static_cast<std::size_t>(v)]++ == 0) touched.push_back(v);
                        }
                        int best = touched.front();
                        for (int v : touched) {
                          const int tv = tally[static_cast<std::size_t>(v)];
                          const int tb = tally[static_cast<std::size_t>(best)];
                          if (tv > tb || (tv == tb && v < best)) best = v;
                        }
                        for (int v : touched) tally[static_cast<std::size_t>(v)] = 0;
                        modes(k, j) = best;
                      }
                    });
    return;
  }

  for (Eigen::Index k = 0; k < K; ++k) {
    if (counts[static_cast<std::size_t>(k)] == 0) continue;
    for (Eigen::Index j = 0; j < d; ++j) {
      std::map<double, int> tally;
      for (Eigen::Index i : members[static_cast<std::size_t>(k)]) ++tally[X(i, j)];
      double best_v = tally.begin()->first;
      int best_c = tally.begin()->second;
      for (const auto& [v, c] : tally) {
        if (c > best_c) {
          best_v = v;
          best_c = c;
        }
      }
      modes(k, j) = best_v;
    }
  }
}

HardClustering kmodes_run(const Eigen::MatrixXd& X, int K, const KModesParams& params,
                          std::mt19937_64 rng) {
  const auto n = X.rows();
  // Initial modes: K distinct random rows.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < K; ++i) {
    std::uniform_int_distribution<int> pick(i, static_cast<int>(n) - 1);
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(pick(rng))]);
  }
  Eigen::MatrixXd modes(K, X.cols());
  for (int k = 0; k < K; ++k) modes.row(k) = X.row(order[static_cast<std::size_t>(k)]);

  HardClustering result;
  result.seed = params.seed;
  double prev_cost = -1;
  for (int iter = 0; iter < params.max_iters; ++iter) {
    Assignment st = assign_points(X, modes, params.threads);
    result.objective_history.push_back(st.cost);
    result.iterations = iter + 1;

    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    column_modes(X, st.assignments, st.counts, modes, params.threads);
    for (Eigen::Index k = 0; k < K; ++k) {
      if (st.counts[static_cast<std::size_t>(k)] > 0) continue;
      // empty cluster: reseed at the worst-matched point
      Eigen::Index far = -1;
      int far_d = -1;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (!taken[static_cast<std::size_t>(i)] && st.point_cost[static_cast<std::size_t>(i)] > far_d) {
          far_d = st.point_cost[static_cast<std::size_t>(i)];
          far = i;
        }
      }
      taken[static_cast<std::size_t>(far)] = 1;
      modes.row(k) = X.row(far);
    }

    if (prev_cost >= 0 && st.cost == prev_cost) break;
    prev_cost = st.cost;
  }

  Assignment st = assign_points(X, modes, params.threads);
  result.objective_history.push_back(st.cost);
  result.assignments = std::move(st.assignments);
  result.centers = std::move(modes);
  result.distortion = st.cost;
  return result;
}

}  // namespace

HardClustering kmodes(const Eigen::MatrixXd& X, int K, const KModesParams& params) {
  const auto n = X.rows();
  if (K < 1) fail_arg(cat("K must be >= 1, got ", K));
  if (K > n) fail_arg(cat("K = ", K, " exceeds the number of points ", n));
  if (params.n_init < 1) fail_arg("n_init must be >= 1");
  if (!X.allFinite()) fail_arg("k-modes input contains non-finite values");

  HardClustering best;
  bool have = false;
  for (int init = 0; init < params.n_init; ++init) {
    auto rng = make_rng(params.seed, {0x4307e5, static_cast<std::uint64_t>(init)});
    HardClustering run = kmodes_run(X, K, params, std::move(rng));
    if (!have || run.distortion < best.distortion) {
      best = std::move(run);
      have = true;
    }
  }
  return best;
}

}  // namespace spikeclust
