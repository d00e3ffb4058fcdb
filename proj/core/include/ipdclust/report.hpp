#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ipdclust/cluster.hpp"
#include "ipdclust/types.hpp"

namespace ipdclust {

// ASW serialization: fixed 6 decimal places.
std::string format_asw(double v);

std::string merge_policy_name(MergePolicy policy);
MergePolicy merge_policy_from_name(const std::string& name);  // Error on unknown

struct RunReportMeta {
  std::string distance = "euclidean";
  std::optional<double> accuracy;      // percent, present when truth labels exist
  std::optional<std::uint64_t> seed;   // present for generated inputs
};

// Deterministic JSON with fixed key order: algorithm, distance,
// params{h, n_prime, renormalize_each_round, merge_policy}, K, cluster_sizes,
// asw (null when K = 1), accuracy?, assignments, rounds[{densest, extracted}],
// merged, seed?.
std::string run_report_json(const ClusterReport& report, const RunReportMeta& meta);
void write_run_report(const ClusterReport& report, const RunReportMeta& meta,
                      const std::string& path);

// Grid table plus the winning cell: algorithm, distance, params, grid rows in
// scan order, best.
std::string scan_report_json(const ScanResult& result, const std::string& distance,
                             const HyperParams& base);
void write_scan_report(const ScanResult& result, const std::string& distance,
                       const HyperParams& base, const std::string& path);

// Assembled by the caller so each baseline can carry its own parameter block;
// params and extras are ordered (key, raw JSON value) pairs emitted verbatim.
struct BaselineReport {
  std::string algorithm;
  std::string distance = "euclidean";
  std::vector<std::pair<std::string, std::string>> params;
  int K = 0;
  std::vector<int> cluster_sizes;
  std::optional<double> asw;
  std::optional<double> accuracy;
  std::vector<int> assignments;  // dbscan marks noise with 0
  std::vector<std::pair<std::string, std::string>> extras;
};

std::string baseline_report_json(const BaselineReport& report);
void write_baseline_report(const BaselineReport& report, const std::string& path);

void write_text_file(const std::string& content, const std::string& path);

}  // namespace ipdclust
