#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ipdclust/types.hpp"

namespace ipdclust {

enum class DistanceMeasure { euclidean, gower, geodesic_sphere, precomputed };

std::string distance_name(DistanceMeasure measure);
DistanceMeasure distance_from_name(const std::string& name);  // DataError on unknown

double euclidean(const double* a, const double* b, std::size_t p);

// Equal-weight Gower dissimilarity in [0,1]. Continuous terms use |a-b|/range
// with the full-dataset range (0 when the range is 0); binary and categorical
// terms are exact-match indicators.
double gower(const double* a, const double* b, const VariableSchema& schema,
             const std::vector<std::pair<double, double>>& ranges);

// Great-circle distance in metres between (lon,lat) degree pairs on the mean
// Earth sphere, R = 6371008.8 m. Haversine form; DataError when a latitude
// leaves [-90,90] or a longitude leaves [-180,180].
double geodesic_sphere(double lon1, double lat1, double lon2, double lat2);

inline constexpr double kEarthRadiusM = 6371008.8;

// Symmetric zero-diagonal matrix of pairwise dissimilarities. Rows are
// computed in parallel over disjoint index ranges. geodesic_sphere requires
// p == 2 with columns (lon, lat); gower takes ranges from the full dataset.
DistanceMatrix pairwise_matrix(const DataMatrix& data, DistanceMeasure measure);

// Divides every entry by the maximum. DegenerateDataError when the maximum is
// zero (all members coincide).
DistanceMatrix normalize_matrix(const DistanceMatrix& raw);

}  // namespace ipdclust
