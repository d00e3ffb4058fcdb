#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ipdclust {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unreadable input: bad cells, ragged rows, schema violations,
// asymmetric precomputed matrices. CLI exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input the algorithm cannot act on: all-zero distances,
// single-cluster ASW requests, fully degenerate scan grids. CLI exit code 3.
class DegenerateDataError : public Error {
 public:
  using Error::Error;
};

enum class ColumnKind { continuous, binary, categorical };

// One kind per data column; length must equal p.
using VariableSchema = std::vector<ColumnKind>;

struct DataMatrix {
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<double> values;          // row-major, n*p
  VariableSchema schema;               // size p
  std::vector<std::string> col_names;  // size p
  std::vector<int> labels;             // ground-truth classes; empty or size n

  double at(std::size_t i, std::size_t j) const { return values[i * p + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * p + j]; }
  const double* row(std::size_t i) const { return values.data() + i * p; }
  bool has_labels() const { return !labels.empty(); }
};

// All-continuous matrix with default column names x1..xp.
DataMatrix make_data(std::size_t n, std::size_t p);

struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<double> d;  // n*n, symmetric, zero diagonal
  bool normalized = false;

  double at(std::size_t i, std::size_t j) const { return d[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return d[i * n + j]; }
  const double* row(std::size_t i) const { return d.data() + i * n; }
  double max_entry() const;
};

DistanceMatrix make_distance_matrix(std::size_t n);

enum class MergePolicy { always, asw_guard };

struct HyperParams {
  double h = 0.10;                    // in (0,1): neighborhood radius = bandwidth
  int n_prime = 1;                    // minimum cluster size
  bool renormalize_each_round = true;
  MergePolicy merge_policy = MergePolicy::asw_guard;

  // Violation description, or nullopt when valid.
  std::optional<std::string> validate() const;
};

// Cluster label per member; labels are the contiguous set {1..K} assigned in
// extraction order.
using ClusterAssignment = std::vector<int>;

int num_clusters(const ClusterAssignment& assignment);

struct RoundTrace {
  int round_index = 0;                  // 1-based
  std::size_t densest_member = 0;       // original row index
  std::vector<std::size_t> extracted;   // original row indices, ascending
  double renormalization_max = 1.0;     // submatrix max divided out this round
};

struct ClusterReport {
  HyperParams params;
  ClusterAssignment assignment;
  ClusterAssignment pre_merge_assignment;
  std::vector<int> cluster_sizes;       // in label order; sums to n
  std::optional<double> asw;            // absent when K = 1
  std::vector<RoundTrace> rounds;
  bool merged = false;                  // merge step changed and was adopted
};

// Per-column (min, max); min == max for constant columns.
std::vector<std::pair<double, double>> column_ranges(const DataMatrix& data);

// First invariant violation with row/column coordinates, or nullopt.
std::optional<std::string> validate(const DataMatrix& data);

}  // namespace ipdclust
