#include "ipdclust/report.hpp"

#include <cstdio>
#include <fstream>

#include "ipdclust/csv.hpp"

namespace ipdclust {

std::string format_asw(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string merge_policy_name(MergePolicy policy) {
  return policy == MergePolicy::always ? "always" : "asw-guard";
}

MergePolicy merge_policy_from_name(const std::string& name) {
  if (name == "always") return MergePolicy::always;
  if (name == "asw-guard") return MergePolicy::asw_guard;
  throw Error("unknown merge policy: " + name);
}

namespace {

std::string int_array(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string size_array(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string params_json(const HyperParams& params) {
  std::string out = "{\"h\":" + format_double(params.h);
  out += ",\"n_prime\":" + std::to_string(params.n_prime);
  out += ",\"renormalize_each_round\":";
  out += params.renormalize_each_round ? "true" : "false";
  out += ",\"merge_policy\":\"" + merge_policy_name(params.merge_policy) + "\"}";
  return out;
}

std::string optional_asw(const std::optional<double>& asw) {
  return asw ? format_asw(*asw) : "null";
}

}  // namespace

std::string run_report_json(const ClusterReport& report, const RunReportMeta& meta) {
  std::string out = "{\"algorithm\":\"ipd-kde\"";
  out += ",\"distance\":\"" + meta.distance + "\"";
  out += ",\"params\":" + params_json(report.params);
  out += ",\"K\":" + std::to_string(num_clusters(report.assignment));
  out += ",\"cluster_sizes\":" + int_array(report.cluster_sizes);
  out += ",\"asw\":" + optional_asw(report.asw);
  if (meta.accuracy) out += ",\"accuracy\":" + format_double(*meta.accuracy);
  out += ",\"assignments\":" + int_array(report.assignment);
  out += ",\"rounds\":[";
  for (std::size_t r = 0; r < report.rounds.size(); ++r) {
    if (r) out += ',';
    out += "{\"densest\":" + std::to_string(report.rounds[r].densest_member);
    out += ",\"extracted\":" + size_array(report.rounds[r].extracted) + "}";
  }
  out += "],\"merged\":";
  out += report.merged ? "true" : "false";
  if (meta.seed) out += ",\"seed\":" + std::to_string(*meta.seed);
  out += "}\n";
  return out;
}

void write_text_file(const std::string& content, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  out << content;
  if (!out.flush()) throw DataError("write failed: " + path);
}

void write_run_report(const ClusterReport& report, const RunReportMeta& meta,
                      const std::string& path) {
  write_text_file(run_report_json(report, meta), path);
}

namespace {

std::string scan_row_json(const ScanRow& row) {
  std::string out = "{\"h\":" + format_double(row.h);
  out += ",\"n_prime\":" + std::to_string(row.n_prime);
  out += ",\"K\":" + std::to_string(row.K);
  out += ",\"cluster_sizes\":" + int_array(row.cluster_sizes);
  out += ",\"asw\":" + optional_asw(row.asw) + "}";
  return out;
}

}  // namespace

std::string scan_report_json(const ScanResult& result, const std::string& distance,
                             const HyperParams& base) {
  std::string out = "{\"algorithm\":\"ipd-kde-scan\"";
  out += ",\"distance\":\"" + distance + "\"";
  out += ",\"params\":{\"renormalize_each_round\":";
  out += base.renormalize_each_round ? "true" : "false";
  out += ",\"merge_policy\":\"" + merge_policy_name(base.merge_policy) + "\"}";
  out += ",\"grid\":[";
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    if (r) out += ',';
    out += scan_row_json(result.rows[r]);
  }
  out += "],\"best\":" + scan_row_json(result.rows[result.best_index]);
  out += "}\n";
  return out;
}

void write_scan_report(const ScanResult& result, const std::string& distance,
                       const HyperParams& base, const std::string& path) {
  write_text_file(scan_report_json(result, distance, base), path);
}

std::string baseline_report_json(const BaselineReport& report) {
  std::string out = "{\"algorithm\":\"" + report.algorithm + "\"";
  out += ",\"distance\":\"" + report.distance + "\"";
  out += ",\"params\":{";
  for (std::size_t i = 0; i < report.params.size(); ++i) {
    if (i) out += ',';
    out += "\"" + report.params[i].first + "\":" + report.params[i].second;
  }
  out += "}";
  out += ",\"K\":" + std::to_string(report.K);
  out += ",\"cluster_sizes\":" + int_array(report.cluster_sizes);
  out += ",\"asw\":" + optional_asw(report.asw);
  if (report.accuracy) out += ",\"accuracy\":" + format_double(*report.accuracy);
  out += ",\"assignments\":" + int_array(report.assignments);
  for (const auto& [key, value] : report.extras) out += ",\"" + key + "\":" + value;
  out += "}\n";
  return out;
}

void write_baseline_report(const BaselineReport& report, const std::string& path) {
  write_text_file(baseline_report_json(report), path);
}

}  // namespace ipdclust
