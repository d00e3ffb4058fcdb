#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ipdclust/types.hpp"

namespace ipdclust {

// splitmix64 finalizer; also used to derive substream seeds.
std::uint64_t mix64(std::uint64_t z);

// Counter-based splitmix64 stream. Identical output on every platform; the
// first draw for seed 0 is 0xE220A8397B1DCDAF.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform draw strictly inside (0,1) with 53-bit resolution.
  double uniform();

  // Statistically independent stream; derived from the current state, does
  // not advance it.
  SeededRng substream(std::uint64_t stream_id) const;

 private:
  std::uint64_t state_;
};

// Standard normal CDF and density.
double norm_cdf(double x);
double norm_pdf(double x);

// Inverse standard normal CDF: rational approximation polished by one Newton
// step against norm_cdf. |error| below 1e-9 everywhere. Error outside (0,1).
double inv_norm_cdf(double u);

// CDF of the t distribution with 2 degrees of freedom (closed form).
double t2_cdf(double x);

// In-place lower Cholesky factor of a symmetric positive-definite matrix
// (row-major p*p). Error when a pivot is not positive.
std::vector<double> cholesky_lower(const std::vector<double>& sigma, std::size_t p);

// 200 x 2 mixed data: column 1 binary (class-conditional Bernoulli, P(1) 0.2
// vs 0.8), column 2 Cauchy around 0 vs 3. Rows 1-100 class 1, 101-200
// class 2; labels populated.
DataMatrix gen_s1(std::uint64_t seed);

// 45 x 6 equicorrelated (rho 0.15) t2-copula data with standard normal
// marginals shifted by group mean 0 / -3 / +3; group sizes 20 / 15 / 10.
DataMatrix gen_s3(std::uint64_t seed);

// Skeleton geometry for the four noisy outlines, all inside the unit square
// with at least 0.05 clearance between shapes at noise_sd 0.05.
struct S4Config {
  double noise_sd = 0.05;
  double square_x0 = 0.10, square_y0 = 0.55, square_side = 0.30;
  double rect_x0 = 0.45, rect_y0 = 0.60, rect_w = 0.45, rect_h = 0.20;
  double half_cx = 0.30, half_cy = 0.28, half_r = 0.22;  // arc over [0, pi]
  double circle_cx = 0.75, circle_cy = 0.28, circle_r = 0.16;
};

// Point on the outline of group (1..4) at perimeter parameter u in [0,1).
std::pair<double, double> s4_skeleton_point(int group, double u, const S4Config& config = {});

// 400 x 2 noisy outlines: square, rectangle, half-circle arc, circle; 100
// points each, labels 1..4. Each point is a uniform perimeter position plus
// isotropic Gaussian noise of sd config.noise_sd.
DataMatrix gen_s4(std::uint64_t seed, const S4Config& config = {});

}  // namespace ipdclust
