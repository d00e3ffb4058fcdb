#pragma once

#include <cstdint>
#include <vector>

#include "ipdclust/types.hpp"

namespace ipdclust {

// Silhouette width per member on the raw (unnormalized) matrix: a(i) is the
// mean distance to the member's own cluster (self excluded), b(i) the
// smallest mean distance to any other cluster, s(i) = (b-a)/max(a,b).
// Singletons get 0, as does a member at distance 0 from both its own and the
// nearest other cluster. DegenerateDataError when K = 1.
std::vector<double> silhouette_widths(const ClusterAssignment& assignment,
                                      const DistanceMatrix& distances);

// Mean silhouette width over all members.
double asw(const ClusterAssignment& assignment, const DistanceMatrix& distances);

// Members per label, in label order {1..K}. Error on labels outside that set.
std::vector<int> cluster_sizes(const ClusterAssignment& assignment);

// Percent of members whose predicted cluster maps onto their true class under
// the best injective mapping from predicted labels to truth labels. Unmapped
// predicted clusters (K above the class count) count as misclassified.
// Exhaustive search when both label sets have at most 8 values, optimal
// assignment search above that; the two agree exactly where both apply.
double accuracy_percent(const ClusterAssignment& predicted, const std::vector<int>& truth);

namespace detail {

// Maximum total overlap of an injective row-to-column mapping of a
// contingency table. Exhaustive branch-and-bound over the smaller side.
std::int64_t best_match_exhaustive(const std::vector<std::vector<std::int64_t>>& contingency);

// Same quantity via the Hungarian assignment algorithm.
std::int64_t best_match_assignment(const std::vector<std::vector<std::int64_t>>& contingency);

}  // namespace detail

}  // namespace ipdclust
