#pragma once

#include <string>
#include <vector>

namespace spikeclust {

// Canonical variant ordering: the five stock names in dataset-table order
// (Alpha, Beta, Delta, Gamma, Epsilon), any other label lexicographic after
// them. Used for contingency rows, tie-breaks, and one-vs-rest class order.
bool variant_less(const std::string& a, const std::string& b);

// Distinct labels in canonical order.
std::vector<std::string> distinct_variants(const std::vector<std::string>& labels);

// Maps labels to class indices following distinct_variants order.
struct EncodedLabels {
  std::vector<int> y;
  std::vector<std::string> classes;
};
EncodedLabels encode_labels(const std::vector<std::string>& labels);

}  // namespace spikeclust
