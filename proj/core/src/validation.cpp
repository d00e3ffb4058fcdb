#include "ipdclust/validation.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace ipdclust {

std::vector<double> silhouette_widths(const ClusterAssignment& assignment,
                                      const DistanceMatrix& distances) {
  std::size_t n = assignment.size();
  if (n != distances.n) throw Error("silhouette: assignment and matrix sizes differ");
  int K = num_clusters(assignment);
  if (K < 2) throw DegenerateDataError("silhouette is undefined for a single cluster");

  std::vector<std::vector<std::size_t>> members(K + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (assignment[i] < 1 || assignment[i] > K) throw Error("silhouette: label outside {1..K}");
    members[assignment[i]].push_back(i);
  }

  std::vector<double> s(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    int own = assignment[i];
    const auto& own_members = members[own];
    if (own_members.size() == 1) {
      s[i] = 0.0;
      continue;
    }
    double a = 0.0;
    for (std::size_t j : own_members)
      if (j != i) a += distances.at(i, j);
    a /= static_cast<double>(own_members.size() - 1);

    double b = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= K; ++k) {
      if (k == own || members[k].empty()) continue;
      double m = 0.0;
      for (std::size_t j : members[k]) m += distances.at(i, j);
      m /= static_cast<double>(members[k].size());
      b = std::min(b, m);
    }
    double denom = std::max(a, b);
    s[i] = denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return s;
}

double asw(const ClusterAssignment& assignment, const DistanceMatrix& distances) {
  std::vector<double> s = silhouette_widths(assignment, distances);
  double total = 0.0;
  for (double v : s) total += v;
  return total / static_cast<double>(s.size());
}

std::vector<int> cluster_sizes(const ClusterAssignment& assignment) {
  int K = num_clusters(assignment);
  if (K < 1) throw Error("cluster_sizes: empty assignment");
  std::vector<int> sizes(K, 0);
  for (int label : assignment) {
    if (label < 1 || label > K) throw Error("cluster_sizes: label outside {1..K}");
    ++sizes[label - 1];
  }
  return sizes;
}

namespace detail {

namespace {

std::int64_t match_rec(const std::vector<std::vector<std::int64_t>>& table, std::size_t row,
                       std::uint32_t used_cols) {
  if (row == table.size()) return 0;
  std::size_t cols = table[0].size();
  // A row may also stay unmapped; relevant when rows outnumber columns.
  std::int64_t best = match_rec(table, row + 1, used_cols);
  for (std::size_t c = 0; c < cols; ++c) {
    if (used_cols & (1u << c)) continue;
    std::int64_t v = table[row][c] + match_rec(table, row + 1, used_cols | (1u << c));
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

std::int64_t best_match_exhaustive(const std::vector<std::vector<std::int64_t>>& contingency) {
  if (contingency.empty()) return 0;
  return match_rec(contingency, 0, 0);
}

std::int64_t best_match_assignment(const std::vector<std::vector<std::int64_t>>& contingency) {
  if (contingency.empty()) return 0;
  std::size_t rows = contingency.size();
  std::size_t cols = contingency[0].size();
  std::size_t m = std::max(rows, cols);

  // Hungarian algorithm with potentials on a square min-cost matrix; weights
  // are negated overlaps, padding cells cost 0 (unmapped cluster).
  std::vector<std::vector<std::int64_t>> cost(m + 1, std::vector<std::int64_t>(m + 1, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) cost[r + 1][c + 1] = -contingency[r][c];

  const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(m + 1, 0), v(m + 1, 0);
  std::vector<std::size_t> way(m + 1, 0), match_col(m + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    match_col[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      std::size_t i0 = match_col[j0], j1 = 0;
      std::int64_t delta = kInf;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        std::int64_t cur = cost[i0][j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_col[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      match_col[j0] = match_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::int64_t total = 0;
  for (std::size_t j = 1; j <= m; ++j) total -= cost[match_col[j]][j];
  return total;
}

}  // namespace detail

double accuracy_percent(const ClusterAssignment& predicted, const std::vector<int>& truth) {
  if (predicted.empty()) throw Error("accuracy: empty assignment");
  if (predicted.size() != truth.size()) throw Error("accuracy: assignment and truth sizes differ");

  std::map<int, std::size_t> pred_index, truth_index;
  for (int v : predicted)
    if (!pred_index.count(v)) pred_index[v] = pred_index.size();
  for (int v : truth)
    if (!truth_index.count(v)) truth_index[v] = truth_index.size();
  // std::map iteration re-numbered the values in insertion order; rebuild in
  // sorted-label order for stable tables.
  {
    std::size_t idx = 0;
    for (auto& kv : pred_index) kv.second = idx++;
    idx = 0;
    for (auto& kv : truth_index) kv.second = idx++;
  }

  std::vector<std::vector<std::int64_t>> table(pred_index.size(),
                                               std::vector<std::int64_t>(truth_index.size(), 0));
  for (std::size_t i = 0; i < predicted.size(); ++i)
    ++table[pred_index[predicted[i]]][truth_index[truth[i]]];

  std::int64_t best;
  if (std::max(pred_index.size(), truth_index.size()) <= 8)
    best = detail::best_match_exhaustive(table);
  else
    best = detail::best_match_assignment(table);
  return 100.0 * static_cast<double>(best) / static_cast<double>(predicted.size());
}

}  // namespace ipdclust
