#pragma once

#include <optional>
#include <string>

#include "ipdclust/types.hpp"

namespace ipdclust {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

struct CsvReadOptions {
  bool header = true;
  // Column to split out as ground-truth labels. Unset: a column literally
  // named "label" is used when present. Requires a header.
  std::optional<std::string> labels_column;
  // Applied to the data columns (labels excluded); empty means all
  // continuous. Length mismatches are data errors.
  VariableSchema schema;
};

// Plain numeric comma-separated file, decimal point, no quoting. Errors name
// the offending row/column (1-based, header = row 1 when present).
DataMatrix load_csv(const std::string& path, const CsvReadOptions& options = {});

// Header (column names, plus "label" when labels are present) followed by one
// row per member; values in shortest round-trip form.
void write_csv(const DataMatrix& data, const std::string& path);

// Headerless square numeric CSV of pairwise distances. Validated: square,
// nonnegative, diagonal within 1e-9 of zero, symmetric within 1e-9. The
// matrix is returned exactly symmetric with an exactly zero diagonal (upper
// triangle canonical).
DistanceMatrix load_distance_csv(const std::string& path);

// Square CSV the loader above accepts, round-tripping every entry exactly.
void write_distance_csv(const DistanceMatrix& distances, const std::string& path);

}  // namespace ipdclust
