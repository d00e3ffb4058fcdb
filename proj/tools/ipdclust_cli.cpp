#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipdclust/ipdclust.hpp"
#include "json.hpp"

namespace {

using namespace ipdclust;

// Usage problems detected after flag parsing (bad flag combinations).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VariableSchema parse_schema_file(const std::string& path,
                                 const std::vector<std::string>& col_names) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open schema file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("schema file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.contains("columns") || !doc["columns"].is_array())
    throw DataError("schema file needs a top-level 'columns' array");
  VariableSchema schema;
  std::size_t idx = 0;
  for (const auto& col : doc["columns"]) {
    std::string type = col.value("type", "");
    if (type == "continuous")
      schema.push_back(ColumnKind::continuous);
    else if (type == "binary")
      schema.push_back(ColumnKind::binary);
    else if (type == "categorical")
      schema.push_back(ColumnKind::categorical);
    else
      throw DataError("schema column " + std::to_string(idx + 1) + " has unknown type '" + type +
                      "'");
    if (col.contains("name") && idx < col_names.size() &&
        col["name"].get<std::string>() != col_names[idx])
      throw DataError("schema column " + std::to_string(idx + 1) + " is named '" +
                      col["name"].get<std::string>() + "' but the file column is '" +
                      col_names[idx] + "'");
    ++idx;
  }
  return schema;
}

struct ClusterArgs {
  std::string input, schema_path, labels_col, distance = "euclidean";
  double h = 0.0;
  int n_prime = 0;
  bool no_renorm = false;
  std::string merge_policy = "asw-guard";
  std::string report_path, assign_path, plot_path;
  bool use_pca = false;
};

DataMatrix load_input(const std::string& input, const std::string& schema_path,
                      const std::string& labels_col) {
  CsvReadOptions options;
  if (!labels_col.empty()) options.labels_column = labels_col;
  DataMatrix data = load_csv(input, options);
  if (!schema_path.empty()) {
    VariableSchema schema = parse_schema_file(schema_path, data.col_names);
    if (schema.size() != data.p)
      throw DataError("schema has " + std::to_string(schema.size()) + " columns, file has " +
                      std::to_string(data.p));
    data.schema = schema;
    if (auto bad = validate(data)) throw DataError(*bad);
  }
  return data;
}

int run_cluster(const ClusterArgs& args) {
  DistanceMeasure measure = distance_from_name(args.distance);
  HyperParams params;
  params.h = args.h;
  params.n_prime = args.n_prime;
  params.renormalize_each_round = !args.no_renorm;
  params.merge_policy = merge_policy_from_name(args.merge_policy);

  ClusterReport report;
  RunReportMeta meta;
  meta.distance = args.distance;
  std::optional<DataMatrix> data;

  if (measure == DistanceMeasure::precomputed) {
    if (!args.schema_path.empty() || !args.labels_col.empty())
      throw UsageError("--schema and --labels-col do not apply to a precomputed matrix");
    if (!args.plot_path.empty())
      throw UsageError("--plot needs coordinates; a precomputed matrix has none");
    report = cluster_distances(load_distance_csv(args.input), params);
  } else {
    data = load_input(args.input, args.schema_path, args.labels_col);
    report = cluster_data(*data, measure, params);
    if (data->has_labels()) meta.accuracy = accuracy_percent(report.assignment, data->labels);
  }

  write_run_report(report, meta, args.report_path);

  if (!args.assign_path.empty()) {
    std::string out = "row,cluster\n";
    for (std::size_t i = 0; i < report.assignment.size(); ++i)
      out += std::to_string(i + 1) + "," + std::to_string(report.assignment[i]) + "\n";
    write_text_file(out, args.assign_path);
  }

  if (!args.plot_path.empty()) {
    std::vector<double> points;
    if (args.use_pca) {
      points = pca2(*data).projection;
    } else if (data->p == 2) {
      points = data->values;
    } else {
      throw UsageError("--plot needs 2-column data; pass --pca to project");
    }
    render_svg_scatter(points, data->n, report.assignment, args.plot_path);
  }
  return 0;
}

struct ScanArgs {
  std::string input, schema_path, labels_col, distance = "euclidean";
  std::vector<double> hs;
  std::vector<int> n_primes;
  bool no_renorm = false;
  std::string merge_policy = "asw-guard";
  std::string report_path;
};

int run_scan(const ScanArgs& args) {
  DistanceMeasure measure = distance_from_name(args.distance);
  HyperParams base;
  base.renormalize_each_round = !args.no_renorm;
  base.merge_policy = merge_policy_from_name(args.merge_policy);

  DistanceMatrix raw;
  if (measure == DistanceMeasure::precomputed) {
    if (!args.schema_path.empty() || !args.labels_col.empty())
      throw UsageError("--schema and --labels-col do not apply to a precomputed matrix");
    raw = load_distance_csv(args.input);
  } else {
    DataMatrix data = load_input(args.input, args.schema_path, args.labels_col);
    raw = pairwise_matrix(data, measure);
  }
  ScanResult result = scan(raw, args.hs, args.n_primes, base);
  write_scan_report(result, args.distance, base, args.report_path);
  return 0;
}

struct GenArgs {
  std::string dataset;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  DataMatrix data;
  if (args.dataset == "s1")
    data = gen_s1(args.seed);
  else if (args.dataset == "s3")
    data = gen_s3(args.seed);
  else
    data = gen_s4(args.seed);
  write_csv(data, args.out);
  return 0;
}

struct BaselineArgs {
  std::string algo, input, schema_path, labels_col;
  int k = 0;
  int restarts = 20;
  std::uint64_t seed = 1;
  double eps = -1.0;
  int min_pts = 0;
  std::string report_path;
};

int run_baseline(const BaselineArgs& args) {
  DataMatrix data = load_input(args.input, args.schema_path, args.labels_col);
  DistanceMatrix distances = pairwise_matrix(data, DistanceMeasure::euclidean);

  BaselineReport report;
  report.algorithm = args.algo;
  report.distance = "euclidean";

  if (args.algo == "kmeans") {
    if (args.k < 1) throw UsageError("kmeans needs --k");
    KmeansResult result = kmeans(data, args.k, args.seed, args.restarts);
    report.params = {{"k", std::to_string(args.k)}, {"restarts", std::to_string(args.restarts)}};
    report.K = num_clusters(result.assignment);
    report.cluster_sizes = cluster_sizes(result.assignment);
    if (report.K >= 2) report.asw = asw(result.assignment, distances);
    report.assignments = result.assignment;
    if (data.has_labels()) report.accuracy = accuracy_percent(result.assignment, data.labels);
    report.extras = {{"objective", format_double(result.objective)},
                     {"seed", std::to_string(args.seed)}};
  } else if (args.algo == "pam") {
    if (args.k < 1) throw UsageError("pam needs --k");
    PamResult result = pam(distances, args.k);
    report.params = {{"k", std::to_string(args.k)}};
    report.K = num_clusters(result.assignment);
    report.cluster_sizes = cluster_sizes(result.assignment);
    if (report.K >= 2) report.asw = asw(result.assignment, distances);
    report.assignments = result.assignment;
    if (data.has_labels()) report.accuracy = accuracy_percent(result.assignment, data.labels);
    std::string medoids = "[";
    for (std::size_t m = 0; m < result.medoids.size(); ++m) {
      if (m) medoids += ',';
      medoids += std::to_string(result.medoids[m]);
    }
    medoids += "]";
    report.extras = {{"medoids", medoids}, {"total_cost", format_double(result.total_cost)}};
  } else {
    if (args.eps < 0.0 || args.min_pts < 1) throw UsageError("dbscan needs --eps and --min-pts");
    DbscanResult result = dbscan(distances, args.eps, args.min_pts);
    report.params = {{"eps", format_double(args.eps)},
                     {"min_pts", std::to_string(args.min_pts)}};
    report.K = result.K;
    if (result.K > 0) {
      report.cluster_sizes.assign(result.K, 0);
      for (int v : result.assignment)
        if (v > 0) ++report.cluster_sizes[v - 1];
    }
    report.asw = dbscan_asw(result, distances, NoiseHandling::exclude);
    report.assignments = result.assignment;
    if (data.has_labels()) {
      // Noise members stay label 0, which no true class matches.
      report.accuracy = accuracy_percent(result.assignment, data.labels);
    }
    report.extras = {{"noise_count", std::to_string(result.noise_count)},
                     {"asw_convention", "\"exclude\""}};
  }

  write_baseline_report(report, args.report_path);
  return 0;
}

struct KnnArgs {
  std::string input, out;
  int k = 0;
};

int run_knn_profile(const KnnArgs& args) {
  DataMatrix data = load_input(args.input, "", "");
  DistanceMatrix distances = pairwise_matrix(data, DistanceMeasure::euclidean);
  std::vector<double> profile = knn_dist_profile(distances, args.k);
  std::string out = "rank,knn_distance\n";
  for (std::size_t i = 0; i < profile.size(); ++i)
    out += std::to_string(i + 1) + "," + format_double(profile[i]) + "\n";
  write_text_file(out, args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interpoint-distance KDE clustering"};
  app.require_subcommand(1);
  // --h is a real option below; keep help on --help only.
  app.set_help_flag("--help", "print help");

  const std::vector<std::string> distances = {"euclidean", "gower", "geodesic", "precomputed"};
  const std::vector<std::string> policies = {"asw-guard", "always"};

  ClusterArgs cluster_args;
  CLI::App* cmd_cluster = app.add_subcommand("cluster", "cluster one dataset at fixed (h, n')");
  cmd_cluster->set_help_flag("--help", "print help");
  cmd_cluster->add_option("--input", cluster_args.input, "input CSV")->required();
  cmd_cluster->add_option("--schema", cluster_args.schema_path, "column schema JSON");
  cmd_cluster->add_option("--labels-col", cluster_args.labels_col, "ground-truth label column");
  cmd_cluster->add_option("--distance", cluster_args.distance, "distance measure")
      ->required()
      ->check(CLI::IsMember(distances));
  cmd_cluster->add_option("--h", cluster_args.h, "bandwidth / neighborhood radius in (0,1)")
      ->required();
  cmd_cluster->add_option("--n-prime", cluster_args.n_prime, "minimum cluster size")->required();
  cmd_cluster->add_flag("--no-renormalize-rounds", cluster_args.no_renorm,
                        "skip per-round re-normalization");
  cmd_cluster->add_option("--merge-policy", cluster_args.merge_policy, "merge adoption policy")
      ->check(CLI::IsMember(policies));
  cmd_cluster->add_option("--report", cluster_args.report_path, "output report JSON")->required();
  cmd_cluster->add_option("--assign", cluster_args.assign_path, "output assignment CSV");
  cmd_cluster->add_option("--plot", cluster_args.plot_path, "output scatter SVG");
  cmd_cluster->add_flag("--pca", cluster_args.use_pca, "project to 2 components for --plot");

  ScanArgs scan_args;
  CLI::App* cmd_scan = app.add_subcommand("scan", "grid-scan (h, n') and pick the best ASW");
  cmd_scan->set_help_flag("--help", "print help");
  cmd_scan->add_option("--input", scan_args.input, "input CSV")->required();
  cmd_scan->add_option("--schema", scan_args.schema_path, "column schema JSON");
  cmd_scan->add_option("--labels-col", scan_args.labels_col, "ground-truth label column");
  cmd_scan->add_option("--distance", scan_args.distance, "distance measure")
      ->required()
      ->check(CLI::IsMember(distances));
  cmd_scan->add_option("--h", scan_args.hs, "bandwidth grid, comma-separated")
      ->required()
      ->delimiter(',');
  cmd_scan->add_option("--n-prime", scan_args.n_primes, "minimum-size grid, comma-separated")
      ->required()
      ->delimiter(',');
  cmd_scan->add_flag("--no-renormalize-rounds", scan_args.no_renorm,
                     "skip per-round re-normalization");
  cmd_scan->add_option("--merge-policy", scan_args.merge_policy, "merge adoption policy")
      ->check(CLI::IsMember(policies));
  cmd_scan->add_option("--report", scan_args.report_path, "output scan JSON")->required();

  GenArgs gen_args;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a seeded benchmark dataset");
  cmd_gen->set_help_flag("--help", "print help");
  cmd_gen->add_option("--dataset", gen_args.dataset, "dataset family")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"s1", "s3", "s4"}));
  cmd_gen->add_option("--seed", gen_args.seed, "RNG seed")->required();
  cmd_gen->add_option("--out", gen_args.out, "output CSV")->required();

  BaselineArgs baseline_args;
  CLI::App* cmd_baseline = app.add_subcommand("baseline", "run a reference clustering method");
  cmd_baseline->set_help_flag("--help", "print help");
  cmd_baseline->add_option("--algo", baseline_args.algo, "baseline algorithm")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"kmeans", "pam", "dbscan"}));
  cmd_baseline->add_option("--input", baseline_args.input, "input CSV")->required();
  cmd_baseline->add_option("--schema", baseline_args.schema_path, "column schema JSON");
  cmd_baseline->add_option("--labels-col", baseline_args.labels_col, "ground-truth label column");
  cmd_baseline->add_option("--k", baseline_args.k, "cluster count (kmeans, pam)");
  cmd_baseline->add_option("--restarts", baseline_args.restarts, "kmeans restarts");
  cmd_baseline->add_option("--seed", baseline_args.seed, "kmeans RNG seed");
  cmd_baseline->add_option("--eps", baseline_args.eps, "dbscan radius");
  cmd_baseline->add_option("--min-pts", baseline_args.min_pts, "dbscan core threshold");
  cmd_baseline->add_option("--report", baseline_args.report_path, "output report JSON")
      ->required();

  KnnArgs knn_args;
  CLI::App* cmd_knn = app.add_subcommand("knn-profile", "sorted k-th nearest-neighbor distances");
  cmd_knn->set_help_flag("--help", "print help");
  cmd_knn->add_option("--input", knn_args.input, "input CSV")->required();
  cmd_knn->add_option("--k", knn_args.k, "neighbor rank")->required();
  cmd_knn->add_option("--out", knn_args.out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_cluster->parsed()) return run_cluster(cluster_args);
    if (cmd_scan->parsed()) return run_scan(scan_args);
    if (cmd_gen->parsed()) return run_gen(gen_args);
    if (cmd_baseline->parsed()) return run_baseline(baseline_args);
    if (cmd_knn->parsed()) return run_knn_profile(knn_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
