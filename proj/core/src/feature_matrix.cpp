#include "spikeclust/feature_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "spikeclust/common.hpp"

namespace spikeclust {

void FeatureMatrix::check_consistent() const {
  if (values.rows() != static_cast<Eigen::Index>(row_ids.size())) {
    fail_arg(cat("feature matrix has ", values.rows(), " rows but ", row_ids.size(),
                 " row ids"));
  }
  if (values.cols() != static_cast<Eigen::Index>(column_ids.size())) {
    fail_arg(cat("feature matrix has ", values.cols(), " columns but ",
                 column_ids.size(), " column ids"));
  }
}

FeatureMatrix FeatureMatrix::select_columns(const std::vector<int>& indices) const {
  check_consistent();
  FeatureMatrix out;
  out.values.resize(values.rows(), static_cast<Eigen::Index>(indices.size()));
  out.column_ids.reserve(indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const int idx = indices[j];
    if (idx < 0 || idx >= values.cols()) fail_arg(cat("column index ", idx, " out of range"));
    out.values.col(static_cast<Eigen::Index>(j)) = values.col(idx);
    out.column_ids.push_back(column_ids[static_cast<std::size_t>(idx)]);
  }
  out.row_ids = row_ids;
  out.k = 0;
  return out;
}

namespace {

void append_double(std::string& buf, double v) {
  char tmp[40];
  std::snprintf(tmp, sizeof(tmp), "%.17g", v);
  buf += tmp;
}

void append_count(std::string& buf, double v) {
  char tmp[32];
  std::snprintf(tmp, sizeof(tmp), "%lld", static_cast<long long>(std::llround(v)));
  buf += tmp;
}

}  // namespace

void write_feature_csv(const std::string& path, const FeatureMatrix& m,
                       const std::string& comment) {
  m.check_consistent();
  std::ofstream out(path);
  if (!out) fail(cat("cannot write feature CSV '", path, "'"));
  if (!comment.empty()) out << '#' << comment << '\n';

  std::string line = "id";
  for (const auto& c : m.column_ids) {
    line += ',';
    line += c;
  }
  line += '\n';
  out << line;

  const bool integral = m.k > 0;
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    line = m.row_ids[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
      line += ',';
      if (integral) {
        append_count(line, m.values(i, j));
      } else {
        append_double(line, m.values(i, j));
      }
    }
    line += '\n';
    out << line;
  }
  if (!out) fail(cat("write failed for '", path, "'"));
}

FeatureMatrix read_feature_csv(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) fail(cat("cannot open feature CSV '", path, "'"));

  std::string line;
  long line_no = 0;
  // header (after comments)
  for (;;) {
    if (!std::getline(in, line)) fail(cat(path, ": missing CSV header"));
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    break;
  }

  FeatureMatrix m;
  {
    std::size_t start = 0;
    bool first = true;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) comma = line.size();
      std::string field = line.substr(start, comma - start);
      if (first) {
        if (field != "id") fail(cat(path, ":", line_no, ": first header column must be 'id'"));
        first = false;
      } else {
        m.column_ids.push_back(std::move(field));
      }
      start = comma + 1;
    }
  }
  const std::size_t d = m.column_ids.size();

  std::vector<double> data;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t start = 0;
    std::size_t field_idx = 0;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) comma = line.size();
      if (field_idx == 0) {
        m.row_ids.push_back(line.substr(start, comma - start));
      } else {
        if (field_idx > d) fail(cat(path, ":", line_no, ": too many fields"));
        char* end = nullptr;
        const char* s = line.c_str() + start;
        const double v = std::strtod(s, &end);
        if (end != line.c_str() + comma) {
          fail(cat(path, ":", line_no, ": bad numeric field '",
                   line.substr(start, comma - start), "'"));
        }
        data.push_back(v);
      }
      ++field_idx;
      start = comma + 1;
    }
    if (field_idx != d + 1) {
      fail(cat(path, ":", line_no, ": expected ", d + 1, " fields, got ", field_idx));
    }
  }

  const std::size_t n = m.row_ids.size();
  m.values.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = data[i * d + j];
    }
  }

  // Re-derive k from the header: uniform-length words over the alphabet.
  if (!m.column_ids.empty()) {
    const std::size_t len = m.column_ids.front().size();
    bool kmerish = len > 0;
    for (const auto& c : m.column_ids) {
      if (c.size() != len) {
        kmerish = false;
        break;
      }
      for (char ch : c) {
        if (!alphabet.contains(ch)) {
          kmerish = false;
          break;
        }
      }
      if (!kmerish) break;
    }
    m.k = kmerish ? static_cast<int>(len) : 0;
  }
  return m;
}

}  // namespace spikeclust
