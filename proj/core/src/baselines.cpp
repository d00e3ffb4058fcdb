#include "ipdclust/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "ipdclust/datagen.hpp"
#include "ipdclust/validation.hpp"

namespace ipdclust {

namespace {

double sq_dist(const double* a, const double* b, std::size_t p) {
  double s = 0.0;
  for (std::size_t k = 0; k < p; ++k) {
    double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

struct LloydRun {
  std::vector<int> labels;  // 0-based
  std::vector<double> centers;
  double objective = 0.0;
  std::vector<double> trace;
};

LloydRun lloyd_once(const DataMatrix& data, int K, SeededRng rng, int max_iters) {
  std::size_t n = data.n, p = data.p;
  std::size_t uK = static_cast<std::size_t>(K);

  // k-means++ seeding.
  std::vector<double> centers;
  centers.reserve(uK * p);
  std::size_t first = std::min(static_cast<std::size_t>(rng.uniform() * static_cast<double>(n)),
                               n - 1);
  centers.insert(centers.end(), data.row(first), data.row(first) + p);
  std::vector<double> d2(n);
  while (centers.size() < uK * p) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c * p < centers.size(); ++c)
        best = std::min(best, sq_dist(data.row(i), centers.data() + c * p, p));
      d2[i] = best;
      total += best;
    }
    std::size_t pick;
    if (total > 0.0) {
      double target = rng.uniform() * total;
      double cum = 0.0;
      pick = n - 1;
      for (std::size_t i = 0; i < n; ++i) {
        cum += d2[i];
        if (cum >= target) {
          pick = i;
          break;
        }
      }
    } else {
      // All points coincide with existing centers.
      pick = std::min(static_cast<std::size_t>(rng.uniform() * static_cast<double>(n)), n - 1);
    }
    centers.insert(centers.end(), data.row(pick), data.row(pick) + p);
  }

  LloydRun run;
  run.centers = std::move(centers);
  run.labels.assign(n, -1);
  std::vector<int> next(n);
  for (int iter = 0; iter < max_iters; ++iter) {
    // Assignment step.
    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      int best_k = 0;
      double best = sq_dist(data.row(i), run.centers.data(), p);
      for (int k = 1; k < K; ++k) {
        double d = sq_dist(data.row(i), run.centers.data() + static_cast<std::size_t>(k) * p, p);
        if (d < best) {
          best = d;
          best_k = k;
        }
      }
      next[i] = best_k;
    }
    // Refill emptied clusters with the point farthest from its centroid.
    std::vector<int> counts(uK, 0);
    for (std::size_t i = 0; i < n; ++i) ++counts[next[i]];
    for (int k = 0; k < K; ++k) {
      if (counts[k] != 0) continue;
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        double d = sq_dist(data.row(i),
                           run.centers.data() + static_cast<std::size_t>(next[i]) * p, p);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      --counts[next[far]];
      next[far] = k;
      ++counts[k];
    }
    for (std::size_t i = 0; i < n; ++i)
      objective += sq_dist(data.row(i),
                           run.centers.data() + static_cast<std::size_t>(next[i]) * p, p);
    run.trace.push_back(objective);

    if (next == run.labels) break;
    run.labels = next;

    // Update step.
    std::fill(run.centers.begin(), run.centers.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double* c = run.centers.data() + static_cast<std::size_t>(run.labels[i]) * p;
      const double* x = data.row(i);
      for (std::size_t j = 0; j < p; ++j) c[j] += x[j];
    }
    for (int k = 0; k < K; ++k) {
      double* c = run.centers.data() + static_cast<std::size_t>(k) * p;
      for (std::size_t j = 0; j < p; ++j) c[j] /= static_cast<double>(counts[k]);
    }
  }

  run.objective = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    run.objective += sq_dist(data.row(i),
                             run.centers.data() + static_cast<std::size_t>(run.labels[i]) * p, p);
  return run;
}

}  // namespace

KmeansResult kmeans(const DataMatrix& data, int K, std::uint64_t seed, int restarts,
                    int max_iters) {
  if (auto bad = validate(data)) throw DataError(*bad);
  if (K < 1 || static_cast<std::size_t>(K) > data.n)
    throw Error("kmeans: K must lie in [1, n]");
  if (restarts < 1) throw Error("kmeans: restarts must be >= 1");

  SeededRng root(seed);
  LloydRun best;
  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    LloydRun run = lloyd_once(data, K, root.substream(static_cast<std::uint64_t>(r)), max_iters);
    if (!have || run.objective < best.objective) {
      best = std::move(run);
      have = true;
    }
  }

  KmeansResult result;
  result.assignment.resize(data.n);
  for (std::size_t i = 0; i < data.n; ++i) result.assignment[i] = best.labels[i] + 1;
  result.centroids = std::move(best.centers);
  result.objective = best.objective;
  result.objective_trace = std::move(best.trace);
  return result;
}

PamResult pam(const DistanceMatrix& raw, int K) {
  std::size_t n = raw.n;
  if (K < 1 || static_cast<std::size_t>(K) > n) throw Error("pam: K must lie in [1, n]");
  std::size_t uK = static_cast<std::size_t>(K);

  auto nearest_cost = [&](const std::vector<std::size_t>& meds) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = raw.at(i, meds[0]);
      for (std::size_t m = 1; m < meds.size(); ++m) best = std::min(best, raw.at(i, meds[m]));
      total += best;
    }
    return total;
  };

  // BUILD: start from the minimum row sum, then add the candidate with the
  // largest total cost reduction.
  std::vector<std::size_t> medoids;
  {
    std::size_t best = 0;
    double best_sum = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += raw.at(i, j);
      if (s < best_sum) {
        best_sum = s;
        best = i;
      }
    }
    medoids.push_back(best);
  }
  std::vector<bool> is_medoid(n, false);
  is_medoid[medoids[0]] = true;
  std::vector<double> dmin(n);
  while (medoids.size() < uK) {
    for (std::size_t i = 0; i < n; ++i) {
      double best = raw.at(i, medoids[0]);
      for (std::size_t m = 1; m < medoids.size(); ++m) best = std::min(best, raw.at(i, medoids[m]));
      dmin[i] = best;
    }
    double best_gain = -1.0;
    std::size_t best_j = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_medoid[j]) continue;
      double gain = 0.0;
      for (std::size_t i = 0; i < n; ++i) gain += std::max(dmin[i] - raw.at(i, j), 0.0);
      if (gain > best_gain) {
        best_gain = gain;
        best_j = j;
      }
    }
    medoids.push_back(best_j);
    is_medoid[best_j] = true;
  }

  PamResult result;
  result.cost_trace.push_back(nearest_cost(medoids));

  // SWAP: scan (medoid slot, candidate) pairs in index order and take the
  // first strict improvement; restart the scan after each accepted swap.
  bool improved = true;
  while (improved) {
    improved = false;
    double current = nearest_cost(medoids);
    for (std::size_t mi = 0; mi < uK && !improved; ++mi) {
      for (std::size_t j = 0; j < n; ++j) {
        if (is_medoid[j]) continue;
        std::size_t old = medoids[mi];
        medoids[mi] = j;
        double trial = nearest_cost(medoids);
        if (trial < current - 1e-15) {
          is_medoid[old] = false;
          is_medoid[j] = true;
          result.cost_trace.push_back(trial);
          improved = true;
          break;
        }
        medoids[mi] = old;
      }
    }
  }

  std::sort(medoids.begin(), medoids.end());
  result.medoids = medoids;
  result.total_cost = nearest_cost(medoids);
  result.assignment.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best_m = 0;
    double best = raw.at(i, medoids[0]);
    for (std::size_t m = 1; m < uK; ++m) {
      double d = raw.at(i, medoids[m]);
      if (d < best) {
        best = d;
        best_m = m;
      }
    }
    result.assignment[i] = static_cast<int>(best_m) + 1;
  }
  return result;
}

DbscanResult dbscan(const DistanceMatrix& raw, double eps, int min_pts) {
  if (eps < 0.0) throw Error("dbscan: eps must be >= 0");
  if (min_pts < 1) throw Error("dbscan: min_pts must be >= 1");
  std::size_t n = raw.n;

  std::vector<std::vector<std::size_t>> neighbors(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (raw.at(i, j) <= eps) neighbors[i].push_back(j);  // includes self

  DbscanResult result;
  result.assignment.assign(n, 0);
  result.core.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    result.core[i] = neighbors[i].size() >= static_cast<std::size_t>(min_pts);

  int cid = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!result.core[i] || result.assignment[i] != 0) continue;
    ++cid;
    result.assignment[i] = cid;
    std::deque<std::size_t> queue{i};
    while (!queue.empty()) {
      std::size_t j = queue.front();
      queue.pop_front();
      for (std::size_t q : neighbors[j]) {
        if (result.assignment[q] != 0) continue;
        result.assignment[q] = cid;
        if (result.core[q]) queue.push_back(q);
      }
    }
  }
  result.K = cid;
  for (int v : result.assignment)
    if (v == 0) ++result.noise_count;
  return result;
}

std::optional<double> dbscan_asw(const DbscanResult& result, const DistanceMatrix& raw,
                                 NoiseHandling handling) {
  std::size_t n = result.assignment.size();
  if (n != raw.n) throw Error("dbscan_asw: assignment and matrix sizes differ");

  if (handling == NoiseHandling::exclude) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i)
      if (result.assignment[i] != 0) kept.push_back(i);
    if (kept.size() < 2 || result.K < 2) return std::nullopt;
    DistanceMatrix sub = make_distance_matrix(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a)
      for (std::size_t b = 0; b < kept.size(); ++b) sub.at(a, b) = raw.at(kept[a], kept[b]);
    ClusterAssignment labels(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) labels[a] = result.assignment[kept[a]];
    return asw(labels, sub);
  }

  ClusterAssignment labels(n);
  int next_label = result.K;
  for (std::size_t i = 0; i < n; ++i) {
    if (result.assignment[i] != 0) {
      labels[i] = result.assignment[i];
    } else if (handling == NoiseHandling::singletons) {
      labels[i] = ++next_label;
    } else {
      labels[i] = result.K + 1;
    }
  }
  if (num_clusters(labels) < 2) return std::nullopt;
  return asw(labels, raw);
}

std::vector<double> knn_dist_profile(const DistanceMatrix& raw, int k) {
  std::size_t n = raw.n;
  if (n < 2) throw Error("knn_dist_profile: need at least 2 members");
  if (k < 1 || static_cast<std::size_t>(k) > n - 1)
    throw Error("knn_dist_profile: k must lie in [1, n-1]");
  std::vector<double> kth(n);
  std::vector<double> buffer;
  buffer.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    buffer.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) buffer.push_back(raw.at(i, j));
    std::nth_element(buffer.begin(), buffer.begin() + (k - 1), buffer.end());
    kth[i] = buffer[k - 1];
  }
  std::sort(kth.begin(), kth.end());
  return kth;
}

}  // namespace ipdclust
