#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ipdclust/types.hpp"

namespace ipdclust {

struct KmeansResult {
  ClusterAssignment assignment;  // 1..K
  std::vector<double> centroids;  // row-major K*p
  double objective = 0.0;         // total within-cluster squared distance
  // Objective after each assignment step of the winning restart;
  // non-increasing by construction of Lloyd's method.
  std::vector<double> objective_trace;
};

// k-means++ seeding followed by Lloyd iterations (at most max_iters), run
// restarts times with substreams of seed; the lowest objective wins, earlier
// restart on ties. An emptied cluster is refilled with the point farthest
// from its current centroid. Error when K < 1 or K > n.
KmeansResult kmeans(const DataMatrix& data, int K, std::uint64_t seed, int restarts = 20,
                    int max_iters = 300);

struct PamResult {
  ClusterAssignment assignment;       // 1..K by ascending medoid row
  std::vector<std::size_t> medoids;   // ascending row indices
  double total_cost = 0.0;            // sum of distances to nearest medoid
  std::vector<double> cost_trace;     // after BUILD, then after each accepted swap
};

// Deterministic PAM: greedy BUILD then first-improvement SWAP over
// (medoid, candidate) pairs in index order, accepting only strict cost
// decreases. Error when K < 1 or K > n.
PamResult pam(const DistanceMatrix& raw, int K);

struct DbscanResult {
  std::vector<int> assignment;  // 0 = noise, clusters 1..K
  std::vector<bool> core;
  int K = 0;
  int noise_count = 0;
};

// Classic DBSCAN on a distance matrix: neighbors at distance <= eps (self
// included in the count), clusters grown breadth-first from core points in
// ascending index order; a border point joins the first cluster that reaches
// it. Error when eps < 0 or min_pts < 1.
DbscanResult dbscan(const DistanceMatrix& raw, double eps, int min_pts);

enum class NoiseHandling {
  exclude,     // drop noise members, ASW over the rest
  singletons,  // each noise member becomes its own cluster (silhouette 0)
  one_cluster  // all noise members form one extra cluster
};

// ASW of a DBSCAN result under the chosen noise convention; absent when the
// convention leaves fewer than 2 clusters or fewer than 2 members.
std::optional<double> dbscan_asw(const DbscanResult& result, const DistanceMatrix& raw,
                                 NoiseHandling handling = NoiseHandling::exclude);

// Sorted k-th nearest-neighbor distance per member (self excluded); the knee
// of this curve is the usual eps heuristic. Error unless 1 <= k <= n-1.
std::vector<double> knn_dist_profile(const DistanceMatrix& raw, int k);

}  // namespace ipdclust
