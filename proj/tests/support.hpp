#pragma once

// Shared fixtures for the unit and acceptance suites: the 12-point worked
// example, bundled-data paths, independent oracles, and seeded random
// instance builders. Oracles here are deliberately written against the
// definitions, not by calling the library code they check.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "ipdclust/csv.hpp"
#include "ipdclust/datagen.hpp"
#include "ipdclust/distance.hpp"
#include "ipdclust/types.hpp"

#ifndef IPDCLUST_DATA_DIR
#error "IPDCLUST_DATA_DIR must be defined by the build"
#endif

namespace testsupport {

// The 12 two-dimensional members of the worked example, in row order. Final
// memberships under (h=0.10, n_prime=2) are {2,2,2,2,1,1,1,1,1,3,3,4}.
inline constexpr double kPts12[12][2] = {
    {-0.30, -0.28}, {-0.22, -0.25}, {-0.27, -0.28}, {-0.24, -0.27},
    {-0.03, 0.00},  {0.05, 0.00},   {-0.03, 0.05},  {0.04, 0.03},
    {-0.02, -0.03}, {0.23, 0.25},   {0.25, 0.23},   {0.45, 0.45}};

inline ipdclust::DataMatrix pts12() {
  ipdclust::DataMatrix data = ipdclust::make_data(12, 2);
  for (std::size_t i = 0; i < 12; ++i) {
    data.at(i, 0) = kPts12[i][0];
    data.at(i, 1) = kPts12[i][1];
  }
  return data;
}

inline std::string data_dir() { return IPDCLUST_DATA_DIR; }

inline std::string ruspini_path() { return data_dir() + "/ruspini.csv"; }

inline ipdclust::DataMatrix load_ruspini() {
  return ipdclust::load_csv(ruspini_path(), {});
}

// Fresh path under the system temp directory; never reused within a process.
inline std::string temp_path(const std::string& stem) {
  static int counter = 0;
  std::filesystem::path dir = std::filesystem::temp_directory_path();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "_%d_%d", static_cast<int>(::getpid()), counter++);
  return (dir / (stem + buf)).string();
}

// Independent O(n^2 K) silhouette: per-member sums into per-label buckets,
// then the textbook a/b/s formulas. Singletons and 0/0 both give 0.
inline std::vector<double> oracle_silhouette(const std::vector<int>& labels,
                                             const ipdclust::DistanceMatrix& d) {
  const std::size_t n = d.n;
  const int K = *std::max_element(labels.begin(), labels.end());
  std::vector<int> sizes(static_cast<std::size_t>(K), 0);
  for (int lab : labels) sizes[static_cast<std::size_t>(lab - 1)]++;
  std::vector<double> widths(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> sum(static_cast<std::size_t>(K), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      sum[static_cast<std::size_t>(labels[j] - 1)] += d.at(i, j);
    }
    const std::size_t own = static_cast<std::size_t>(labels[i] - 1);
    if (sizes[own] < 2) continue;  // singleton: s stays 0
    const double a = sum[own] / (sizes[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < static_cast<std::size_t>(K); ++c) {
      if (c == own || sizes[c] == 0) continue;
      b = std::min(b, sum[c] / sizes[c]);
    }
    const double denom = std::max(a, b);
    widths[i] = denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return widths;
}

inline double oracle_asw(const std::vector<int>& labels, const ipdclust::DistanceMatrix& d) {
  const std::vector<double> w = oracle_silhouette(labels, d);
  double total = 0.0;
  for (double v : w) total += v;
  return total / static_cast<double>(w.size());
}

// n x p continuous points, coordinates uniform in [0, spread).
inline ipdclust::DataMatrix random_points(std::uint64_t seed, std::size_t n, std::size_t p,
                                          double spread = 1.0) {
  ipdclust::SeededRng rng(seed);
  ipdclust::DataMatrix data = ipdclust::make_data(n, p);
  for (double& v : data.values) v = rng.uniform() * spread;
  return data;
}

// Labels 1..K, each guaranteed nonempty (first K members pinned).
inline std::vector<int> random_assignment(std::uint64_t seed, std::size_t n, int K) {
  ipdclust::SeededRng rng(seed);
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < static_cast<std::size_t>(K)) {
      labels[i] = static_cast<int>(i) + 1;
    } else {
      labels[i] = 1 + static_cast<int>(rng.uniform() * K);
      labels[i] = std::min(labels[i], K);
    }
  }
  return labels;
}

// Scales every entry of a distance matrix, keeping flags.
inline ipdclust::DistanceMatrix scaled(const ipdclust::DistanceMatrix& d, double c) {
  ipdclust::DistanceMatrix out = d;
  for (double& v : out.d) v *= c;
  return out;
}

}  // namespace testsupport
