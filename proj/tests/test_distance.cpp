#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ipdclust/distance.hpp"
#include "support.hpp"

using namespace ipdclust;
using testsupport::pts12;
using testsupport::random_points;

TEST_CASE("euclidean basics") {
  const double a[2] = {0, 0};
  const double b[2] = {3, 4};
  CHECK(euclidean(a, b, 2) == 5.0);
  CHECK(euclidean(a, a, 2) == 0.0);
}

TEST_CASE("euclidean on two worked-example members") {
  // (0.04,0.03) vs (-0.03,0): sqrt(0.07^2 + 0.03^2)
  DataMatrix d = pts12();
  CHECK(euclidean(d.row(7), d.row(4), 2) == doctest::Approx(0.0761577).epsilon(1e-6));
}

TEST_CASE("worked-example max pair distance") {
  // sqrt(0.75^2 + 0.73^2) between rows 0 and 11, recomputed to full precision
  DistanceMatrix raw = pairwise_matrix(pts12(), DistanceMeasure::euclidean);
  double best = -1.0;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < raw.n; ++i)
    for (std::size_t j = i + 1; j < raw.n; ++j)
      if (raw.at(i, j) > best) {
        best = raw.at(i, j);
        bi = i;
        bj = j;
      }
  CHECK(best == 1.0466135867644752);
  CHECK(bi == 0);
  CHECK(bj == 11);
}

TEST_CASE("gower identical rows and mixed extremes") {
  VariableSchema schema = {ColumnKind::binary, ColumnKind::continuous};
  std::vector<std::pair<double, double>> ranges = {{0, 1}, {0, 10}};
  const double same[2] = {1, 4};
  CHECK(gower(same, same, schema, ranges) == 0.0);

  const double lo[2] = {0, 0};
  const double hi[2] = {1, 10};
  CHECK(gower(lo, hi, schema, ranges) == 1.0);  // (1 + 1) / 2

  const double a[2] = {1, 0};
  const double b[2] = {1, 5};
  CHECK(gower(a, b, schema, ranges) == 0.25);  // (0 + 0.5) / 2
}

TEST_CASE("gower zero-range continuous column contributes 0") {
  VariableSchema schema = {ColumnKind::continuous, ColumnKind::continuous};
  std::vector<std::pair<double, double>> ranges = {{3, 3}, {0, 2}};
  const double a[2] = {3, 0};
  const double b[2] = {3, 1};
  CHECK(gower(a, b, schema, ranges) == 0.25);  // (0 + 0.5) / 2
}

TEST_CASE("gower categorical exact-match rule") {
  VariableSchema schema = {ColumnKind::categorical};
  std::vector<std::pair<double, double>> ranges = {{0, 7}};
  const double a[1] = {3};
  const double b[1] = {5};
  CHECK(gower(a, a, schema, ranges) == 0.0);
  CHECK(gower(a, b, schema, ranges) == 1.0);
}

TEST_CASE("gower stays in [0,1] and symmetric on random mixed rows") {
  VariableSchema schema = {ColumnKind::binary, ColumnKind::continuous, ColumnKind::categorical,
                           ColumnKind::continuous};
  SeededRng rng(99);
  for (int t = 0; t < 200; ++t) {
    double a[4], b[4];
    for (int j = 0; j < 4; ++j) {
      a[j] = rng.uniform() * 4;
      b[j] = rng.uniform() * 4;
    }
    a[0] = a[0] < 2 ? 0 : 1;
    b[0] = b[0] < 2 ? 0 : 1;
    a[2] = std::floor(a[2]);
    b[2] = std::floor(b[2]);
    std::vector<std::pair<double, double>> ranges = {{0, 1}, {0, 4}, {0, 4}, {0, 4}};
    double dab = gower(a, b, schema, ranges);
    CHECK(dab >= 0.0);
    CHECK(dab <= 1.0);
    CHECK(dab == gower(b, a, schema, ranges));
  }
}

TEST_CASE("geodesic landmark distances") {
  CHECK(geodesic_sphere(12.5, -33.0, 12.5, -33.0) == 0.0);
  const double pi = std::numbers::pi;
  CHECK(geodesic_sphere(0, 0, 180, 0) == doctest::Approx(pi * kEarthRadiusM).epsilon(1e-12));
  CHECK(geodesic_sphere(0, 0, 0, 90) == doctest::Approx(pi / 2 * kEarthRadiusM).epsilon(1e-12));
  CHECK(geodesic_sphere(2, 48, -74, 40) == geodesic_sphere(-74, 40, 2, 48));
}

TEST_CASE("geodesic rejects out-of-range coordinates") {
  CHECK_THROWS_AS(geodesic_sphere(0, 91, 0, 0), DataError);
  CHECK_THROWS_AS(geodesic_sphere(181, 0, 0, 0), DataError);
  CHECK_THROWS_AS(geodesic_sphere(0, 0, 0, -90.5), DataError);
}

TEST_CASE("pairwise_matrix degenerate shapes") {
  DataMatrix two = make_data(2, 3);
  two.values = {1, 2, 3, 1, 2, 3};
  DistanceMatrix d2 = pairwise_matrix(two, DistanceMeasure::euclidean);
  CHECK(d2.n == 2);
  CHECK(d2.at(0, 1) == 0.0);
  CHECK(d2.at(1, 0) == 0.0);

  DataMatrix one = make_data(1, 2);
  one.values = {4, 5};
  DistanceMatrix d1 = pairwise_matrix(one, DistanceMeasure::euclidean);
  CHECK(d1.n == 1);
  CHECK(d1.at(0, 0) == 0.0);
}

TEST_CASE("pairwise_matrix equals brute force exactly") {
  DataMatrix data = random_points(7, 37, 5, 3.0);
  DistanceMatrix d = pairwise_matrix(data, DistanceMeasure::euclidean);
  for (std::size_t i = 0; i < data.n; ++i) {
    CHECK(d.at(i, i) == 0.0);
    for (std::size_t j = 0; j < data.n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < data.p; ++k) {
        double diff = data.at(i, k) - data.at(j, k);
        acc += diff * diff;
      }
      CHECK(d.at(i, j) == std::sqrt(acc));
      CHECK(d.at(i, j) == d.at(j, i));
    }
  }
}

TEST_CASE("pairwise_matrix geodesic requires two columns") {
  DataMatrix data = make_data(2, 3);
  data.values = {0, 0, 0, 1, 1, 1};
  CHECK_THROWS_AS(pairwise_matrix(data, DistanceMeasure::geodesic_sphere), DataError);
}

TEST_CASE("pairwise_matrix rejects precomputed kind") {
  CHECK_THROWS_AS(pairwise_matrix(make_data(2, 2), DistanceMeasure::precomputed), Error);
}

TEST_CASE("euclidean triangle inequality on random triples") {
  SeededRng rng(2024);
  for (int t = 0; t < 1000; ++t) {
    double a[3], b[3], c[3];
    for (int j = 0; j < 3; ++j) {
      a[j] = rng.uniform() * 10 - 5;
      b[j] = rng.uniform() * 10 - 5;
      c[j] = rng.uniform() * 10 - 5;
    }
    double ab = euclidean(a, b, 3);
    double bc = euclidean(b, c, 3);
    double ac = euclidean(a, c, 3);
    CHECK(ac <= (ab + bc) * (1 + 1e-12));
  }
}

TEST_CASE("normalize_matrix worked forms") {
  DistanceMatrix d = make_distance_matrix(2);
  d.at(0, 1) = d.at(1, 0) = 2.0;
  DistanceMatrix norm = normalize_matrix(d);
  CHECK(norm.normalized);
  CHECK(norm.at(0, 1) == 1.0);
  CHECK(norm.at(1, 0) == 1.0);
  CHECK(norm.at(0, 0) == 0.0);

  // already at max 1: unchanged
  DistanceMatrix again = normalize_matrix(norm);
  CHECK(again.d == norm.d);
}

TEST_CASE("normalize_matrix max is one and scaling cancels") {
  DataMatrix data = random_points(11, 20, 2);
  DistanceMatrix raw = pairwise_matrix(data, DistanceMeasure::euclidean);
  DistanceMatrix norm = normalize_matrix(raw);
  CHECK(norm.max_entry() == 1.0);

  // power-of-two scale: exact; general scale: one rounding each way
  DistanceMatrix n2 = normalize_matrix(testsupport::scaled(raw, 4.0));
  CHECK(n2.d == norm.d);
  DistanceMatrix n3 = normalize_matrix(testsupport::scaled(raw, 3.0));
  for (std::size_t i = 0; i < norm.d.size(); ++i)
    CHECK(n3.d[i] == doctest::Approx(norm.d[i]).epsilon(1e-12));
}

TEST_CASE("normalize_matrix rejects all-zero distances") {
  DistanceMatrix zero = make_distance_matrix(3);
  CHECK_THROWS_AS(normalize_matrix(zero), DegenerateDataError);
}

TEST_CASE("distance measure names round-trip") {
  for (auto m : {DistanceMeasure::euclidean, DistanceMeasure::gower,
                 DistanceMeasure::geodesic_sphere, DistanceMeasure::precomputed})
    CHECK(distance_from_name(distance_name(m)) == m);
  CHECK_THROWS_AS(distance_from_name("chebyshev"), DataError);
}
