#include "spikeclust/clusterings.hpp"

#include <algorithm>

#include "spikeclust/common.hpp"

namespace spikeclust {

std::vector<int> FuzzyClustering::hard_assignments() const {
  std::vector<int> out(static_cast<std::size_t>(membership.rows()));
  for (Eigen::Index i = 0; i < membership.rows(); ++i) {
    int best = 0;
    for (Eigen::Index j = 1; j < membership.cols(); ++j) {
      if (membership(i, j) > membership(i, best)) best = static_cast<int>(j);
    }
    out[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

int DensityClustering::n_clusters() const {
  int maxid = -1;
  for (int l : labels) maxid = std::max(maxid, l);
  return maxid + 1;
}

const char* linkage_name(Linkage l) {
  switch (l) {
    case Linkage::Single: return "single";
    case Linkage::Complete: return "complete";
    case Linkage::Average: return "average";
    case Linkage::Ward: return "ward";
  }
  return "ward";
}

Linkage linkage_from_name(const std::string& name) {
  if (name == "single") return Linkage::Single;
  if (name == "complete") return Linkage::Complete;
  if (name == "average") return Linkage::Average;
  if (name == "ward") return Linkage::Ward;
  fail_arg(cat("unknown linkage '", name, "' (single|complete|average|ward)"));
}

}  // namespace spikeclust
