#include "spikeclust/agglomerative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spikeclust/common.hpp"
#include "spikeclust/kmeans.hpp"

namespace spikeclust {

namespace {

struct RawMerge {
  int a = 0;  // representative slots (founding point index)
  int b = 0;
  double distance = 0;
};

double lw_update(Linkage linkage, double dak, double dbk, double dab, long na, long nb,
                 long nk) {
  switch (linkage) {
    case Linkage::Single:
      return std::min(dak, dbk);
    case Linkage::Complete:
      return std::max(dak, dbk);
    case Linkage::Average:
      return (static_cast<double>(na) * dak + static_cast<double>(nb) * dbk) /
             static_cast<double>(na + nb);
    case Linkage::Ward: {
      // operates on squared distances
      const double t = static_cast<double>(na + nb + nk);
      return (static_cast<double>(na + nk) * dak + static_cast<double>(nb + nk) * dbk -
              static_cast<double>(nk) * dab) /
             t;
    }
  }
  return 0;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void link(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

std::pair<Dendrogram, HardClustering> agglomerative(const Eigen::MatrixXd& X, int K,
                                                    Linkage linkage,
                                                    const AggloParams& params) {
  const auto n_idx = X.rows();
  const int n = static_cast<int>(n_idx);
  if (n < 2) fail_arg("agglomerative clustering needs at least 2 points");
  if (K < 1 || K > n) fail_arg(cat("K = ", K, " out of range [1, ", n, "]"));
  if (n > params.max_points && !params.allow_large) {
    fail_arg(cat("agglomerative clustering on ", n, " points needs ", n, "^2 distance ",
                 "storage; pass allow_large to proceed"));
  }
  if (!X.allFinite()) fail_arg("agglomerative input contains non-finite values");

  // Pairwise matrix: squared Euclidean for ward, Euclidean otherwise.
  Eigen::MatrixXd dist = squared_distances_to(X, X, params.threads);
  const bool squared = linkage == Linkage::Ward;
  if (!squared) dist = dist.cwiseSqrt();

  std::vector<long> size(static_cast<std::size_t>(n), 1);
  std::vector<char> active(static_cast<std::size_t>(n), 1);
  std::vector<int> chain;
  chain.reserve(static_cast<std::size_t>(n));
  std::vector<RawMerge> raw;
  raw.reserve(static_cast<std::size_t>(n - 1));

  auto lowest_active = [&]() -> int {
    for (int i = 0; i < n; ++i) {
      if (active[static_cast<std::size_t>(i)]) return i;
    }
    return -1;
  };

  while (static_cast<int>(raw.size()) < n - 1) {
    if (chain.size() < 2) {
      chain.clear();
      chain.push_back(lowest_active());
    }
    for (;;) {
      const int a = chain.back();
      double best = std::numeric_limits<double>::infinity();
      int b = -1;
      for (int j = 0; j < n; ++j) {
        if (j == a || !active[static_cast<std::size_t>(j)]) continue;
        const double d = dist(a, j);
        if (d < best) {
          best = d;
          b = j;
        }
      }
      // prefer the chain predecessor on ties so reciprocity is detected
      if (chain.size() >= 2) {
        const int prev = chain[chain.size() - 2];
        if (dist(a, prev) == best) b = prev;
      }
      if (chain.size() >= 2 && b == chain[chain.size() - 2]) {
        // reciprocal nearest neighbors: merge a and b
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        const double dab = dist(lo, hi);
        raw.push_back({lo, hi, squared ? std::sqrt(std::max(0.0, dab)) : dab});
        const long na = size[static_cast<std::size_t>(lo)];
        const long nb = size[static_cast<std::size_t>(hi)];
        for (int k = 0; k < n; ++k) {
          if (k == lo || k == hi || !active[static_cast<std::size_t>(k)]) continue;
          const double upd = lw_update(linkage, dist(lo, k), dist(hi, k), dab, na, nb,
                                       size[static_cast<std::size_t>(k)]);
          dist(lo, k) = upd;
          dist(k, lo) = upd;
        }
        size[static_cast<std::size_t>(lo)] = na + nb;
        active[static_cast<std::size_t>(hi)] = 0;
        chain.pop_back();
        chain.pop_back();
        break;
      }
      chain.push_back(b);
    }
  }

  // Sort merges by height and relabel scipy-style: leaves 0..n-1, merge t
  // creates node n+t.
  std::stable_sort(raw.begin(), raw.end(),
                   [](const RawMerge& x, const RawMerge& y) { return x.distance < y.distance; });
  Dendrogram dendro;
  dendro.linkage = linkage;
  dendro.merges.reserve(raw.size());
  {
    UnionFind uf(2 * n - 1);
    std::vector<int> node_of(static_cast<std::size_t>(2 * n - 1));
    std::iota(node_of.begin(), node_of.end(), 0);
    std::vector<int> node_size(static_cast<std::size_t>(2 * n - 1), 1);
    int next_node = n;
    for (const auto& m : raw) {
      const int ra = node_of[static_cast<std::size_t>(uf.find(m.a))];
      const int rb = node_of[static_cast<std::size_t>(uf.find(m.b))];
      const int sz = node_size[static_cast<std::size_t>(ra)] + node_size[static_cast<std::size_t>(rb)];
      dendro.merges.push_back({std::min(ra, rb), std::max(ra, rb), m.distance, sz});
      uf.link(m.a, m.b);
      const int root = uf.find(m.a);
      node_of[static_cast<std::size_t>(root)] = next_node;
      node_size[static_cast<std::size_t>(next_node)] = sz;
      ++next_node;
    }
  }

  std::vector<int> labels = cut_dendrogram(dendro, n, K);

  HardClustering flat;
  flat.assignments = labels;
  flat.centers = Eigen::MatrixXd::Zero(K, X.cols());
  std::vector<long> counts(static_cast<std::size_t>(K), 0);
  for (int i = 0; i < n; ++i) {
    flat.centers.row(labels[static_cast<std::size_t>(i)]) += X.row(i);
    ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
  }
  for (int k = 0; k < K; ++k) {
    if (counts[static_cast<std::size_t>(k)] > 0) {
      flat.centers.row(k) /= static_cast<double>(counts[static_cast<std::size_t>(k)]);
    }
  }
  flat.distortion = 0;
  for (int i = 0; i < n; ++i) {
    flat.distortion += (X.row(i) - flat.centers.row(labels[static_cast<std::size_t>(i)]))
                           .squaredNorm();
  }
  flat.iterations = 0;
  flat.objective_history = {flat.distortion};
  return {std::move(dendro), std::move(flat)};
}

std::vector<int> cut_dendrogram(const Dendrogram& dendrogram, int n_points, int K) {
  if (K < 1 || K > n_points) fail_arg(cat("K = ", K, " out of range [1, ", n_points, "]"));
  if (static_cast<int>(dendrogram.merges.size()) != n_points - 1) {
    fail_arg("dendrogram size does not match n_points");
  }
  // Walk the first n-K merges; node n+t was created by merge t.
  UnionFind uf(n_points);
  std::vector<int> leaf_of_node(static_cast<std::size_t>(2 * n_points - 1));
  std::iota(leaf_of_node.begin(), leaf_of_node.end(), 0);
  for (int t = 0; t < n_points - K; ++t) {
    const auto& m = dendrogram.merges[static_cast<std::size_t>(t)];
    const int la = leaf_of_node[static_cast<std::size_t>(m.left)];
    const int lb = leaf_of_node[static_cast<std::size_t>(m.right)];
    uf.link(la, lb);
    leaf_of_node[static_cast<std::size_t>(n_points + t)] = uf.find(la);
  }
  // Components numbered by smallest member index.
  std::vector<int> label(static_cast<std::size_t>(n_points), -1);
  std::vector<int> out(static_cast<std::size_t>(n_points));
  int next = 0;
  for (int i = 0; i < n_points; ++i) {
    const int root = uf.find(i);
    if (label[static_cast<std::size_t>(root)] < 0) label[static_cast<std::size_t>(root)] = next++;
    out[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(root)];
  }
  return out;
}

}  // namespace spikeclust
