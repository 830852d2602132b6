#include "spikeclust/fuzzy_cmeans.hpp"

#include <cmath>

#include "spikeclust/common.hpp"
#include "spikeclust/kmeans.hpp"
#include "spikeclust/parallel.hpp"
#include "spikeclust/rng.hpp"

namespace spikeclust {

FuzzyClustering fuzzy_cmeans(const Eigen::MatrixXd& X, int K, const FuzzyParams& params) {
  const auto n = X.rows();
  const auto d = X.cols();
  if (K < 1) fail_arg(cat("K must be >= 1, got ", K));
  if (K > n) fail_arg(cat("K = ", K, " exceeds the number of points ", n));
  if (!(params.m > 1)) fail_arg(cat("fuzzifier must be > 1, got ", params.m));
  if (!X.allFinite()) fail_arg("fuzzy c-means input contains non-finite values");

  FuzzyClustering result;
  result.fuzzifier = params.m;
  result.seed = params.seed;

  // Random normalized membership rows.
  Eigen::MatrixXd U(n, K);
  {
    auto rng = make_rng(params.seed, {0xfc3a});
    std::uniform_real_distribution<double> unit(1e-3, 1.0);
    for (Eigen::Index i = 0; i < n; ++i) {
      double sum = 0;
      for (Eigen::Index j = 0; j < K; ++j) {
        U(i, j) = unit(rng);
        sum += U(i, j);
      }
      U.row(i) /= sum;
    }
  }

  Eigen::MatrixXd centers(K, d);
  // (d_ij/d_il)^(2/(m-1)) == (D_ij/D_il)^(1/(m-1)) on squared distances D
  const double inv_power = 1.0 / (params.m - 1.0);
  const std::size_t nchunks = chunk_count(static_cast<std::size_t>(n), kRowChunk);

  for (int iter = 0; iter < params.max_iters; ++iter) {
    // centers from current memberships
    Eigen::MatrixXd Um = U.array().pow(params.m).matrix();
    std::vector<Eigen::MatrixXd> chunk_num(nchunks);
    std::vector<Eigen::VectorXd> chunk_den(nchunks);
    parallel_chunks(static_cast<std::size_t>(n), kRowChunk, params.threads,
                    [&](std::size_t c, std::size_t b, std::size_t e) {
                      const auto off = static_cast<Eigen::Index>(b);
                      const auto rows = static_cast<Eigen::Index>(e - b);
                      chunk_num[c].noalias() =
                          Um.middleRows(off, rows).transpose() * X.middleRows(off, rows);
                      chunk_den[c] = Um.middleRows(off, rows).colwise().sum();
                    });
    Eigen::MatrixXd num = Eigen::MatrixXd::Zero(K, d);
    Eigen::VectorXd den = Eigen::VectorXd::Zero(K);
    for (std::size_t c = 0; c < nchunks; ++c) {
      num += chunk_num[c];
      den += chunk_den[c];
    }
    for (Eigen::Index j = 0; j < K; ++j) {
      if (den(j) > 0) centers.row(j) = num.row(j) / den(j);
    }

    // membership update + objective, chunked with fixed-order reduction
    const Eigen::MatrixXd D = squared_distances_to(X, centers, params.threads);
    std::vector<double> chunk_obj(nchunks, 0.0);
    std::vector<double> chunk_delta(nchunks, 0.0);
    parallel_chunks(static_cast<std::size_t>(n), kRowChunk, params.threads,
                    [&](std::size_t c, std::size_t b, std::size_t e) {
                      double obj = 0;
                      double delta = 0;
                      for (std::size_t ii = b; ii < e; ++ii) {
                        const auto i = static_cast<Eigen::Index>(ii);
                        int zero_at = -1;
                        for (Eigen::Index j = 0; j < K; ++j) {
                          if (D(i, j) == 0.0) {
                            zero_at = static_cast<int>(j);
                            break;
                          }
                        }
                        Eigen::VectorXd row(K);
                        if (zero_at >= 0) {
                          row.setZero();
                          row(zero_at) = 1.0;
                        } else {
                          double sum = 0;
                          for (Eigen::Index j = 0; j < K; ++j) {
                            row(j) = std::pow(D(i, j), -inv_power);
                            sum += row(j);
                          }
                          row /= sum;
                        }
                        for (Eigen::Index j = 0; j < K; ++j) {
                          delta = std::max(delta, std::abs(row(j) - U(i, j)));
                          obj += std::pow(row(j), params.m) * D(i, j);
                        }
                        U.row(i) = row.transpose();
                      }
                      chunk_obj[c] = obj;
                      chunk_delta[c] = delta;
                    });
    double obj = 0;
    double delta = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
      obj += chunk_obj[c];
      delta = std::max(delta, chunk_delta[c]);
    }
    result.objective_history.push_back(obj);
    result.objective = obj;
    result.iterations = iter + 1;
    if (delta < params.tol) break;
  }

  result.membership = std::move(U);
  result.centers = std::move(centers);
  return result;
}

}  // namespace spikeclust
