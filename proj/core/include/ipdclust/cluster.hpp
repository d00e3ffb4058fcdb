#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ipdclust/distance.hpp"
#include "ipdclust/types.hpp"

namespace ipdclust {

// P-hat for every member of the current matrix, self-distances excluded.
// Members are processed in parallel; each slot is written exactly once.
std::vector<double> neighborhood_probabilities(const DistanceMatrix& current, double h);

// First index attaining the maximum P-hat. 0 for a single-member matrix.
std::size_t densest_member(const DistanceMatrix& current, double h);

// Indices (ascending) with distance to center strictly below h. Always
// contains center itself.
std::vector<std::size_t> extract_cluster(const DistanceMatrix& current, std::size_t center,
                                         double h);

struct RoundsResult {
  ClusterAssignment assignment;    // labels 1..K' in extraction order
  std::vector<RoundTrace> rounds;  // one entry per extraction
};

// Peels clusters off the normalized matrix until no member remains. Each
// round optionally rescales the surviving submatrix by its own maximum, finds
// the densest member, and extracts its h-neighborhood. A final lone member
// becomes its own cluster. An all-zero submatrix skips rescaling; every
// surviving member is then within h of the densest one.
RoundsResult run_rounds(const DistanceMatrix& normalized, double h, bool renormalize_each_round);

struct MergeOutcome {
  ClusterAssignment assignment;  // recompacted to {1..K}
  bool changed = false;          // at least one member was reassigned
  bool skipped = false;          // no cluster reached n_prime; warning emitted
};

// Dissolves clusters smaller than n_prime: each of their members joins the
// qualifying cluster (size >= n_prime on the pre-merge assignment) with the
// smallest mean distance to that cluster's pre-merge members, ties to the
// smaller label. Sizes and means are both taken on the pre-merge assignment,
// so the outcome does not depend on member order.
MergeOutcome merge_small_clusters(const ClusterAssignment& pre_merge,
                                  const DistanceMatrix& normalized, int n_prime);

// Full pipeline on a raw distance matrix: normalize, run rounds, merge, then
// apply the merge policy (asw_guard keeps the pre-merge assignment unless the
// merged one has strictly higher ASW on the raw matrix; a merged K = 1 never
// wins). report.asw is absent when the final K = 1.
ClusterReport cluster_distances(const DistanceMatrix& raw, const HyperParams& params);

// Validates the data, derives the distance matrix, and clusters it.
ClusterReport cluster_data(const DataMatrix& data, DistanceMeasure measure,
                           const HyperParams& params);

struct ScanRow {
  double h = 0.0;
  int n_prime = 0;
  std::optional<double> asw;  // absent when K = 1
  int K = 0;
  std::vector<int> cluster_sizes;
};

struct ScanResult {
  std::vector<ScanRow> rows;   // h-major, both axes ascending and deduplicated
  std::size_t best_index = 0;  // highest ASW; ties to smaller h, then smaller n_prime
};

// Evaluates every (h, n_prime) grid cell under the given policy. The rounds
// run once per h and the merge once per cell. Rows with K = 1 carry no ASW
// and never win; DegenerateDataError when the whole grid is such.
ScanResult scan(const DistanceMatrix& raw, std::vector<double> hs, std::vector<int> n_primes,
                const HyperParams& base);

}  // namespace ipdclust
