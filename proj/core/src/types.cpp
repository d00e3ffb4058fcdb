#include "ipdclust/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ipdclust {

DataMatrix make_data(std::size_t n, std::size_t p) {
  DataMatrix m;
  m.n = n;
  m.p = p;
  m.values.assign(n * p, 0.0);
  m.schema.assign(p, ColumnKind::continuous);
  m.col_names.resize(p);
  for (std::size_t j = 0; j < p; ++j) m.col_names[j] = "x" + std::to_string(j + 1);
  return m;
}

DistanceMatrix make_distance_matrix(std::size_t n) {
  DistanceMatrix d;
  d.n = n;
  d.d.assign(n * n, 0.0);
  return d;
}

double DistanceMatrix::max_entry() const {
  double m = 0.0;
  for (double v : d) m = std::max(m, v);
  return m;
}

std::optional<std::string> HyperParams::validate() const {
  if (!(h > 0.0 && h < 1.0)) return "h must lie in (0,1), got " + std::to_string(h);
  if (n_prime < 1) return "n_prime must be >= 1, got " + std::to_string(n_prime);
  return std::nullopt;
}

int num_clusters(const ClusterAssignment& assignment) {
  int k = 0;
  for (int label : assignment) k = std::max(k, label);
  return k;
}

std::vector<std::pair<double, double>> column_ranges(const DataMatrix& data) {
  std::vector<std::pair<double, double>> ranges(data.p);
  for (std::size_t j = 0; j < data.p; ++j) {
    double lo = data.at(0, j);
    double hi = lo;
    for (std::size_t i = 1; i < data.n; ++i) {
      lo = std::min(lo, data.at(i, j));
      hi = std::max(hi, data.at(i, j));
    }
    ranges[j] = {lo, hi};
  }
  return ranges;
}

std::optional<std::string> validate(const DataMatrix& data) {
  if (data.n == 0) return std::string("matrix has no rows");
  if (data.p == 0) return std::string("matrix has no columns");
  if (data.values.size() != data.n * data.p) return std::string("value buffer size does not match n*p");
  if (data.schema.size() != data.p) return std::string("schema length does not match column count");
  if (!data.col_names.empty() && data.col_names.size() != data.p)
    return std::string("column name list length does not match column count");
  if (!data.labels.empty() && data.labels.size() != data.n)
    return std::string("label vector length does not match row count");
  for (std::size_t i = 0; i < data.n; ++i) {
    for (std::size_t j = 0; j < data.p; ++j) {
      double v = data.at(i, j);
      if (!std::isfinite(v))
        return "non-finite value at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
      if (data.schema[j] == ColumnKind::binary && v != 0.0 && v != 1.0)
        return "binary column violation at row " + std::to_string(i + 1) + ", column " +
               std::to_string(j + 1) + ": value " + std::to_string(v);
    }
  }
  return std::nullopt;
}

}  // namespace ipdclust
