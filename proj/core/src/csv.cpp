#include "ipdclust/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ipdclust {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col) {
  std::string cell = trim(raw);
  const char* begin = cell.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  if (cell.empty() || end != begin + cell.size() || errno == ERANGE)
    throw DataError("unparseable cell at row " + std::to_string(row) + ", column " +
                    std::to_string(col) + ": '" + cell + "'");
  return v;
}

std::vector<std::vector<std::string>> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    rows.push_back(split_line(line));
  }
  if (rows.empty()) throw DataError("file has no rows: " + path);
  return rows;
}

}  // namespace

DataMatrix load_csv(const std::string& path, const CsvReadOptions& options) {
  std::vector<std::vector<std::string>> rows = read_rows(path);

  std::vector<std::string> names;
  std::size_t first_data_row = 0;
  if (options.header) {
    for (const std::string& f : rows[0]) names.push_back(trim(f));
    first_data_row = 1;
    if (rows.size() == 1) throw DataError("file has a header but no data rows: " + path);
  } else if (options.labels_column) {
    throw DataError("a label column needs a header to name it");
  }

  std::size_t total_cols = rows[first_data_row].size();
  if (options.header && names.size() != total_cols)
    throw DataError("row 2 has " + std::to_string(total_cols) + " fields, header has " +
                    std::to_string(names.size()));

  std::size_t label_col = total_cols;  // sentinel: none
  if (options.header) {
    std::string wanted = options.labels_column.value_or("label");
    for (std::size_t j = 0; j < names.size(); ++j)
      if (names[j] == wanted) {
        label_col = j;
        break;
      }
    if (options.labels_column && label_col == total_cols)
      throw DataError("label column not found: " + *options.labels_column);
  }

  bool has_labels = label_col < total_cols;
  std::size_t p = total_cols - (has_labels ? 1 : 0);
  if (p == 0) throw DataError("file has no data columns: " + path);
  std::size_t n = rows.size() - first_data_row;

  DataMatrix data = make_data(n, p);
  if (options.header) {
    data.col_names.clear();
    for (std::size_t j = 0; j < total_cols; ++j)
      if (j != label_col) data.col_names.push_back(names[j]);
  }
  if (!options.schema.empty()) {
    if (options.schema.size() != p)
      throw DataError("schema has " + std::to_string(options.schema.size()) +
                      " columns, file has " + std::to_string(p));
    data.schema = options.schema;
  }
  if (has_labels) data.labels.resize(n);

  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[first_data_row + r];
    std::size_t file_row = first_data_row + r + 1;
    if (row.size() != total_cols)
      throw DataError("row " + std::to_string(file_row) + " has " + std::to_string(row.size()) +
                      " fields, expected " + std::to_string(total_cols));
    std::size_t out_col = 0;
    for (std::size_t j = 0; j < total_cols; ++j) {
      double v = parse_cell(row[j], file_row, j + 1);
      if (j == label_col) {
        if (v != std::floor(v))
          throw DataError("label at row " + std::to_string(file_row) + " is not an integer");
        data.labels[r] = static_cast<int>(v);
      } else {
        data.at(r, out_col++) = v;
      }
    }
  }

  if (auto bad = validate(data)) throw DataError(*bad);
  return data;
}

void write_csv(const DataMatrix& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  for (std::size_t j = 0; j < data.p; ++j) {
    if (j) out << ',';
    out << (j < data.col_names.size() ? data.col_names[j] : "x" + std::to_string(j + 1));
  }
  if (data.has_labels()) out << ",label";
  out << '\n';
  for (std::size_t i = 0; i < data.n; ++i) {
    for (std::size_t j = 0; j < data.p; ++j) {
      if (j) out << ',';
      out << format_double(data.at(i, j));
    }
    if (data.has_labels()) out << ',' << data.labels[i];
    out << '\n';
  }
  if (!out.flush()) throw DataError("write failed: " + path);
}

DistanceMatrix load_distance_csv(const std::string& path) {
  std::vector<std::vector<std::string>> rows = read_rows(path);
  std::size_t n = rows.size();
  DistanceMatrix out = make_distance_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw DataError("distance matrix is not square: row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " fields, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      double v = parse_cell(rows[i][j], i + 1, j + 1);
      if (v < 0.0)
        throw DataError("negative distance at row " + std::to_string(i + 1) + ", column " +
                        std::to_string(j + 1));
      out.at(i, j) = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(out.at(i, i)) > 1e-9)
      throw DataError("nonzero diagonal at row " + std::to_string(i + 1));
    out.at(i, i) = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(out.at(i, j) - out.at(j, i)) > 1e-9)
        throw DataError("asymmetry beyond 1e-9 at (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")");
      out.at(j, i) = out.at(i, j);
    }
  }
  return out;
}

void write_distance_csv(const DistanceMatrix& distances, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  for (std::size_t i = 0; i < distances.n; ++i) {
    for (std::size_t j = 0; j < distances.n; ++j) {
      if (j) out << ',';
      out << format_double(distances.at(i, j));
    }
    out << '\n';
  }
  if (!out.flush()) throw DataError("write failed: " + path);
}

}  // namespace ipdclust
