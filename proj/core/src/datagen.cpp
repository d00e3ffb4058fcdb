#include "ipdclust/datagen.hpp"

#include <cmath>

namespace ipdclust {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr double kPi = 3.14159265358979323846;

// Acklam's rational approximation coefficients.
constexpr double kA[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                          -2.759285104469687e+02, 1.383577518672690e+02,
                          -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                          -1.556989798598866e+02, 6.680131188771972e+01,
                          -1.328068155288572e+01};
constexpr double kC[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                          -2.400758277161838e+00, -2.549732539343734e+00,
                          4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                          2.445134137142996e+00, 3.754408661907416e+00};

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

std::uint64_t SeededRng::next_u64() {
  state_ += kGamma;
  return mix64(state_);
}

double SeededRng::uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

SeededRng SeededRng::substream(std::uint64_t stream_id) const {
  return SeededRng(mix64(state_ ^ (kGamma * (stream_id + 1))));
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double norm_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

double inv_norm_cdf(double u) {
  if (!(u > 0.0 && u < 1.0)) throw Error("inv_norm_cdf: u outside (0,1)");
  const double p_low = 0.02425;
  double x;
  if (u < p_low) {
    double q = std::sqrt(-2.0 * std::log(u));
    x = (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
        ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
  } else if (u <= 1.0 - p_low) {
    double q = u - 0.5;
    double r = q * q;
    x = (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
        (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - u));
    x = -(((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
        ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
  }
  x -= (norm_cdf(x) - u) / norm_pdf(x);
  return x;
}

double t2_cdf(double x) { return 0.5 + x / (2.0 * std::sqrt(2.0 + x * x)); }

std::vector<double> cholesky_lower(const std::vector<double>& sigma, std::size_t p) {
  if (sigma.size() != p * p) throw Error("cholesky_lower: buffer size does not match p*p");
  std::vector<double> L(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < j; ++k) acc += L[i * p + k] * L[j * p + k];
      double s = sigma[i * p + j] - acc;
      if (i == j) {
        if (!(s > 0.0)) throw Error("cholesky_lower: matrix is not positive definite");
        L[i * p + j] = std::sqrt(s);
      } else {
        L[i * p + j] = s / L[j * p + j];
      }
    }
  }
  return L;
}

DataMatrix gen_s1(std::uint64_t seed) {
  SeededRng rng(seed);
  DataMatrix data = make_data(200, 2);
  data.schema = {ColumnKind::binary, ColumnKind::continuous};
  data.labels.resize(200);
  for (std::size_t i = 0; i < 200; ++i) {
    int cls = i < 100 ? 1 : 2;
    double p0 = cls == 1 ? 0.8 : 0.2;
    double loc = cls == 1 ? 0.0 : 3.0;
    double ub = rng.uniform();
    data.at(i, 0) = ub < p0 ? 0.0 : 1.0;
    double uc = rng.uniform();
    data.at(i, 1) = loc + std::tan(kPi * (uc - 0.5));
    data.labels[i] = cls;
  }
  return data;
}

DataMatrix gen_s3(std::uint64_t seed) {
  const std::size_t p = 6;
  std::vector<double> sigma(p * p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) sigma[i * p + j] = i == j ? 1.0 : 0.15;
  std::vector<double> L = cholesky_lower(sigma, p);

  SeededRng rng(seed);
  DataMatrix data = make_data(45, p);
  data.labels.resize(45);
  for (std::size_t i = 0; i < 45; ++i) {
    int group = i < 20 ? 1 : (i < 35 ? 2 : 3);
    double mu = group == 1 ? 0.0 : (group == 2 ? -3.0 : 3.0);
    double eps[p];
    for (std::size_t k = 0; k < p; ++k) eps[k] = inv_norm_cdf(rng.uniform());
    double W = -2.0 * std::log(rng.uniform());
    for (std::size_t r = 0; r < p; ++r) {
      double z = 0.0;
      for (std::size_t k = 0; k <= r; ++k) z += L[r * p + k] * eps[k];
      double x = z / std::sqrt(W / 2.0);
      data.at(i, r) = mu + inv_norm_cdf(t2_cdf(x));
    }
    data.labels[i] = group;
  }
  return data;
}

std::pair<double, double> s4_skeleton_point(int group, double u, const S4Config& config) {
  switch (group) {
    case 1: {
      double s = config.square_side;
      double t = u * 4.0 * s;
      if (t < s) return {config.square_x0 + t, config.square_y0};
      if (t < 2.0 * s) return {config.square_x0 + s, config.square_y0 + (t - s)};
      if (t < 3.0 * s) return {config.square_x0 + s - (t - 2.0 * s), config.square_y0 + s};
      return {config.square_x0, config.square_y0 + s - (t - 3.0 * s)};
    }
    case 2: {
      double w = config.rect_w, h = config.rect_h;
      double t = u * 2.0 * (w + h);
      if (t < w) return {config.rect_x0 + t, config.rect_y0};
      if (t < w + h) return {config.rect_x0 + w, config.rect_y0 + (t - w)};
      if (t < 2.0 * w + h) return {config.rect_x0 + w - (t - w - h), config.rect_y0 + h};
      return {config.rect_x0, config.rect_y0 + h - (t - 2.0 * w - h)};
    }
    case 3: {
      double th = u * kPi;
      return {config.half_cx + config.half_r * std::cos(th),
              config.half_cy + config.half_r * std::sin(th)};
    }
    case 4: {
      double th = u * 2.0 * kPi;
      return {config.circle_cx + config.circle_r * std::cos(th),
              config.circle_cy + config.circle_r * std::sin(th)};
    }
    default:
      throw Error("s4_skeleton_point: group must be 1..4");
  }
}

DataMatrix gen_s4(std::uint64_t seed, const S4Config& config) {
  SeededRng rng(seed);
  DataMatrix data = make_data(400, 2);
  data.labels.resize(400);
  std::size_t row = 0;
  for (int group = 1; group <= 4; ++group) {
    for (int i = 0; i < 100; ++i, ++row) {
      double u = rng.uniform();
      auto [x, y] = s4_skeleton_point(group, u, config);
      double nx = inv_norm_cdf(rng.uniform()) * config.noise_sd;
      double ny = inv_norm_cdf(rng.uniform()) * config.noise_sd;
      data.at(row, 0) = x + nx;
      data.at(row, 1) = y + ny;
      data.labels[row] = group;
    }
  }
  return data;
}

}  // namespace ipdclust
