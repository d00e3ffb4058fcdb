#include "ipdclust/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>

#include "ipdclust/kde.hpp"
#include "ipdclust/parallel.hpp"
#include "ipdclust/validation.hpp"

namespace ipdclust {

std::vector<double> neighborhood_probabilities(const DistanceMatrix& current, double h) {
  std::size_t n = current.n;
  if (n < 2) throw Error("neighborhood_probabilities: need at least 2 members");
  std::vector<double> phat(n);
  double x = h / 2.0;
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double* row = current.row(i);
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        s += gaussian_kernel((x - row[j]) / h);
      }
      double density = s / (static_cast<double>(n - 1) * h);
      phat[i] = density * h;
    }
  });
  return phat;
}

std::size_t densest_member(const DistanceMatrix& current, double h) {
  if (current.n == 1) return 0;
  std::vector<double> phat = neighborhood_probabilities(current, h);
  std::size_t best = 0;
  for (std::size_t i = 1; i < phat.size(); ++i)
    if (phat[i] > phat[best]) best = i;
  return best;
}

std::vector<std::size_t> extract_cluster(const DistanceMatrix& current, std::size_t center,
                                         double h) {
  std::vector<std::size_t> out;
  const double* row = current.row(center);
  for (std::size_t j = 0; j < current.n; ++j)
    if (row[j] < h) out.push_back(j);
  return out;
}

RoundsResult run_rounds(const DistanceMatrix& normalized, double h, bool renormalize_each_round) {
  std::size_t n = normalized.n;
  RoundsResult result;
  result.assignment.assign(n, 0);

  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;
  DistanceMatrix sub = normalized;

  int label = 0;
  int round = 0;
  while (!alive.empty()) {
    ++round;
    std::size_t m = alive.size();
    if (m == 1) {
      ++label;
      result.assignment[alive[0]] = label;
      result.rounds.push_back({round, alive[0], {alive[0]}, 1.0});
      break;
    }

    double used_max = 1.0;
    if (renormalize_each_round) {
      double mx = sub.max_entry();
      if (mx > 0.0) {
        for (double& v : sub.d) v /= mx;
        used_max = mx;
      }
    }

    std::size_t center = densest_member(sub, h);
    std::vector<std::size_t> extracted_local = extract_cluster(sub, center, h);

    ++label;
    RoundTrace trace;
    trace.round_index = round;
    trace.densest_member = alive[center];
    trace.renormalization_max = used_max;
    for (std::size_t j : extracted_local) {
      result.assignment[alive[j]] = label;
      trace.extracted.push_back(alive[j]);
    }
    result.rounds.push_back(std::move(trace));

    std::vector<std::size_t> keep;
    keep.reserve(m - extracted_local.size());
    {
      std::size_t e = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (e < extracted_local.size() && extracted_local[e] == j) {
          ++e;
        } else {
          keep.push_back(j);
        }
      }
    }

    std::vector<std::size_t> next_alive(keep.size());
    DistanceMatrix next_sub = make_distance_matrix(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
      next_alive[a] = alive[keep[a]];
      for (std::size_t b = 0; b < keep.size(); ++b)
        next_sub.at(a, b) = sub.at(keep[a], keep[b]);
    }
    alive = std::move(next_alive);
    sub = std::move(next_sub);
  }
  return result;
}

MergeOutcome merge_small_clusters(const ClusterAssignment& pre_merge,
                                  const DistanceMatrix& normalized, int n_prime) {
  MergeOutcome out;
  out.assignment = pre_merge;
  int K = num_clusters(pre_merge);
  std::vector<int> sizes = cluster_sizes(pre_merge);

  std::vector<int> qualifying;
  bool any_small = false;
  for (int k = 1; k <= K; ++k) {
    if (sizes[k - 1] >= n_prime)
      qualifying.push_back(k);
    else
      any_small = true;
  }
  if (!any_small) return out;
  if (qualifying.empty()) {
    std::cerr << "warning: no cluster reaches size " << n_prime << "; merge step skipped\n";
    out.skipped = true;
    return out;
  }

  std::vector<std::vector<std::size_t>> members(K + 1);
  for (std::size_t i = 0; i < pre_merge.size(); ++i)
    members[pre_merge[i]].push_back(i);

  for (std::size_t i = 0; i < pre_merge.size(); ++i) {
    if (sizes[pre_merge[i] - 1] >= n_prime) continue;
    int best_label = 0;
    double best_mean = std::numeric_limits<double>::infinity();
    for (int k : qualifying) {
      double s = 0.0;
      for (std::size_t j : members[k]) s += normalized.at(i, j);
      double mean = s / static_cast<double>(members[k].size());
      if (mean < best_mean) {
        best_mean = mean;
        best_label = k;
      }
    }
    out.assignment[i] = best_label;
    out.changed = true;
  }

  std::vector<int> remap(K + 1, 0);
  int next = 0;
  for (int k = 1; k <= K; ++k) {
    bool present = false;
    for (int v : out.assignment)
      if (v == k) {
        present = true;
        break;
      }
    if (present) remap[k] = ++next;
  }
  for (int& v : out.assignment) v = remap[v];
  return out;
}

ClusterReport cluster_distances(const DistanceMatrix& raw, const HyperParams& params) {
  if (auto bad = params.validate()) throw Error("invalid parameters: " + *bad);
  if (raw.n == 0) throw DataError("empty distance matrix");

  ClusterReport report;
  report.params = params;

  if (raw.n == 1) {
    report.assignment = {1};
    report.pre_merge_assignment = {1};
    report.cluster_sizes = {1};
    report.rounds = {RoundTrace{1, 0, {0}, 1.0}};
    return report;
  }

  DistanceMatrix normalized = normalize_matrix(raw);
  RoundsResult rounds = run_rounds(normalized, params.h, params.renormalize_each_round);
  report.pre_merge_assignment = rounds.assignment;
  report.rounds = std::move(rounds.rounds);

  MergeOutcome merge = merge_small_clusters(report.pre_merge_assignment, normalized, params.n_prime);

  ClusterAssignment final_assignment = report.pre_merge_assignment;
  bool adopted = false;
  if (merge.changed) {
    if (params.merge_policy == MergePolicy::always) {
      final_assignment = merge.assignment;
      adopted = true;
    } else if (num_clusters(merge.assignment) >= 2) {
      // A merged single cluster has no ASW, so it can never beat pre-merge.
      double pre_asw = asw(report.pre_merge_assignment, raw);
      double post_asw = asw(merge.assignment, raw);
      if (post_asw > pre_asw) {
        final_assignment = merge.assignment;
        adopted = true;
      }
    }
  }

  report.assignment = std::move(final_assignment);
  report.merged = adopted;
  report.cluster_sizes = cluster_sizes(report.assignment);
  if (num_clusters(report.assignment) >= 2) report.asw = asw(report.assignment, raw);
  return report;
}

ClusterReport cluster_data(const DataMatrix& data, DistanceMeasure measure,
                           const HyperParams& params) {
  if (auto bad = validate(data)) throw DataError(*bad);
  return cluster_distances(pairwise_matrix(data, measure), params);
}

ScanResult scan(const DistanceMatrix& raw, std::vector<double> hs, std::vector<int> n_primes,
                const HyperParams& base) {
  if (hs.empty() || n_primes.empty()) throw Error("scan: empty parameter grid");
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  std::sort(n_primes.begin(), n_primes.end());
  n_primes.erase(std::unique(n_primes.begin(), n_primes.end()), n_primes.end());

  for (double h : hs) {
    HyperParams check = base;
    check.h = h;
    if (auto bad = check.validate()) throw Error("invalid parameters: " + *bad);
  }
  for (int np : n_primes) {
    HyperParams check = base;
    check.n_prime = np;
    if (auto bad = check.validate()) throw Error("invalid parameters: " + *bad);
  }
  if (raw.n == 0) throw DataError("empty distance matrix");

  DistanceMatrix normalized = normalize_matrix(raw);

  ScanResult result;
  for (double h : hs) {
    RoundsResult rounds = run_rounds(normalized, h, base.renormalize_each_round);
    std::optional<double> pre_asw;  // computed at most once per h
    for (int np : n_primes) {
      MergeOutcome merge = merge_small_clusters(rounds.assignment, normalized, np);
      ClusterAssignment final_assignment = rounds.assignment;
      if (merge.changed) {
        if (base.merge_policy == MergePolicy::always) {
          final_assignment = merge.assignment;
        } else if (num_clusters(merge.assignment) >= 2) {
          if (!pre_asw) pre_asw = asw(rounds.assignment, raw);
          double post_asw = asw(merge.assignment, raw);
          if (post_asw > *pre_asw) final_assignment = merge.assignment;
        }
      }
      ScanRow row;
      row.h = h;
      row.n_prime = np;
      row.K = num_clusters(final_assignment);
      row.cluster_sizes = cluster_sizes(final_assignment);
      if (row.K >= 2) row.asw = asw(final_assignment, raw);
      result.rows.push_back(std::move(row));
    }
  }

  bool found = false;
  double best_asw = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    if (!result.rows[r].asw) continue;
    if (!found || *result.rows[r].asw > best_asw) {
      found = true;
      best_asw = *result.rows[r].asw;
      result.best_index = r;
    }
  }
  if (!found)
    throw DegenerateDataError("every scan cell produced a single cluster; ASW is undefined");
  return result;
}

}  // namespace ipdclust
