#include "ipdclust/distance.hpp"

#include <cmath>

#include "ipdclust/parallel.hpp"

namespace ipdclust {

std::string distance_name(DistanceMeasure measure) {
  switch (measure) {
    case DistanceMeasure::euclidean: return "euclidean";
    case DistanceMeasure::gower: return "gower";
    case DistanceMeasure::geodesic_sphere: return "geodesic";
    case DistanceMeasure::precomputed: return "precomputed";
  }
  return "euclidean";
}

DistanceMeasure distance_from_name(const std::string& name) {
  if (name == "euclidean") return DistanceMeasure::euclidean;
  if (name == "gower") return DistanceMeasure::gower;
  if (name == "geodesic") return DistanceMeasure::geodesic_sphere;
  if (name == "precomputed") return DistanceMeasure::precomputed;
  throw DataError("unknown distance measure: " + name);
}

double euclidean(const double* a, const double* b, std::size_t p) {
  double s = 0.0;
  for (std::size_t k = 0; k < p; ++k) {
    double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double gower(const double* a, const double* b, const VariableSchema& schema,
             const std::vector<std::pair<double, double>>& ranges) {
  std::size_t p = schema.size();
  double s = 0.0;
  for (std::size_t k = 0; k < p; ++k) {
    if (schema[k] == ColumnKind::continuous) {
      double range = ranges[k].second - ranges[k].first;
      if (range > 0.0) s += std::abs(a[k] - b[k]) / range;
    } else {
      if (a[k] != b[k]) s += 1.0;
    }
  }
  return s / static_cast<double>(p);
}

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

void check_coord(double lon, double lat) {
  if (!(lat >= -90.0 && lat <= 90.0))
    throw DataError("latitude out of range [-90,90]: " + std::to_string(lat));
  if (!(lon >= -180.0 && lon <= 180.0))
    throw DataError("longitude out of range [-180,180]: " + std::to_string(lon));
}

}  // namespace

double geodesic_sphere(double lon1, double lat1, double lon2, double lat2) {
  check_coord(lon1, lat1);
  check_coord(lon2, lat2);
  double phi1 = lat1 * kDegToRad;
  double phi2 = lat2 * kDegToRad;
  double dphi = (lat2 - lat1) * kDegToRad;
  double dlam = (lon2 - lon1) * kDegToRad;
  double sp = std::sin(dphi / 2.0);
  double sl = std::sin(dlam / 2.0);
  double a = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
  if (a > 1.0) a = 1.0;
  return 2.0 * kEarthRadiusM * std::asin(std::sqrt(a));
}

DistanceMatrix pairwise_matrix(const DataMatrix& data, DistanceMeasure measure) {
  if (measure == DistanceMeasure::precomputed)
    throw DataError("precomputed distances must be loaded from file, not derived from data");
  if (measure == DistanceMeasure::geodesic_sphere && data.p != 2)
    throw DataError("geodesic distance needs exactly 2 columns (lon, lat), got " +
                    std::to_string(data.p));

  std::vector<std::pair<double, double>> ranges;
  if (measure == DistanceMeasure::gower) ranges = column_ranges(data);

  if (measure == DistanceMeasure::geodesic_sphere) {
    for (std::size_t i = 0; i < data.n; ++i) check_coord(data.at(i, 0), data.at(i, 1));
  }

  DistanceMatrix out = make_distance_matrix(data.n);
  // Row i fills columns j > i plus the mirror cells (j,i) with i < j; those
  // mirror cells are never touched by row j's own range, so chunks stay
  // disjoint.
  parallel_for(data.n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double* a = data.row(i);
      for (std::size_t j = i + 1; j < data.n; ++j) {
        const double* b = data.row(j);
        double v = 0.0;
        switch (measure) {
          case DistanceMeasure::euclidean:
            v = euclidean(a, b, data.p);
            break;
          case DistanceMeasure::gower:
            v = gower(a, b, data.schema, ranges);
            break;
          case DistanceMeasure::geodesic_sphere:
            v = geodesic_sphere(a[0], a[1], b[0], b[1]);
            break;
          case DistanceMeasure::precomputed:
            break;
        }
        out.at(i, j) = v;
        out.at(j, i) = v;
      }
    }
  });
  return out;
}

DistanceMatrix normalize_matrix(const DistanceMatrix& raw) {
  double m = raw.max_entry();
  if (m <= 0.0)
    throw DegenerateDataError("all interpoint distances are zero; members coincide");
  DistanceMatrix out = raw;
  for (double& v : out.d) v /= m;
  out.normalized = true;
  return out;
}

}  // namespace ipdclust
