#include "spikeclust/labels.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spikeclust {

namespace {

int stock_rank(const std::string& name) {
  static const std::map<std::string, int> ranks = {
      {"Alpha", 0}, {"Beta", 1}, {"Delta", 2}, {"Gamma", 3}, {"Epsilon", 4}};
  auto it = ranks.find(name);
  return it == ranks.end() ? 5 : it->second;
}

}  // namespace

bool variant_less(const std::string& a, const std::string& b) {
  const int ra = stock_rank(a);
  const int rb = stock_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

std::vector<std::string> distinct_variants(const std::vector<std::string>& labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), variant_less);
  return out;
}

EncodedLabels encode_labels(const std::vector<std::string>& labels) {
  EncodedLabels out;
  out.classes = distinct_variants(labels);
  out.y.reserve(labels.size());
  for (const auto& l : labels) {
    const auto it = std::lower_bound(out.classes.begin(), out.classes.end(), l,
                                     variant_less);
    out.y.push_back(static_cast<int>(it - out.classes.begin()));
  }
  return out;
}

}  // namespace spikeclust
