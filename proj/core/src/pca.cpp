#include "ipdclust/pca.hpp"

#include <algorithm>
#include <cmath>

namespace ipdclust {

namespace {

void fix_sign(std::vector<double>& v) {
  std::size_t arg = 0;
  for (std::size_t j = 1; j < v.size(); ++j)
    if (std::abs(v[j]) > std::abs(v[arg])) arg = j;
  if (v[arg] < 0.0)
    for (double& x : v) x = -x;
}

double off_diagonal_norm(const std::vector<double>& m, std::size_t p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (i != j) s += m[i * p + j] * m[i * p + j];
  return std::sqrt(s);
}

// Top-2 eigenpairs of a symmetric matrix by cyclic Jacobi rotations.
void jacobi_top2(std::vector<double> a, std::size_t p, double eigval[2],
                 std::vector<double>* vec1, std::vector<double>* vec2) {
  std::vector<double> V(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) V[i * p + i] = 1.0;

  for (int sweep = 0; sweep < 300 && off_diagonal_norm(a, p) >= 1e-10; ++sweep) {
    for (std::size_t i = 0; i + 1 < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        double apq = a[i * p + j];
        if (apq == 0.0) continue;
        double theta = (a[j * p + j] - a[i * p + i]) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < p; ++k) {
          double aki = a[k * p + i], akj = a[k * p + j];
          a[k * p + i] = c * aki - s * akj;
          a[k * p + j] = s * aki + c * akj;
        }
        for (std::size_t k = 0; k < p; ++k) {
          double aik = a[i * p + k], ajk = a[j * p + k];
          a[i * p + k] = c * aik - s * ajk;
          a[j * p + k] = s * aik + c * ajk;
        }
        for (std::size_t k = 0; k < p; ++k) {
          double vki = V[k * p + i], vkj = V[k * p + j];
          V[k * p + i] = c * vki - s * vkj;
          V[k * p + j] = s * vki + c * vkj;
        }
      }
    }
  }

  std::vector<std::size_t> order(p);
  for (std::size_t i = 0; i < p; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * p + x] > a[y * p + y]; });

  eigval[0] = a[order[0] * p + order[0]];
  eigval[1] = a[order[1] * p + order[1]];
  vec1->resize(p);
  vec2->resize(p);
  for (std::size_t k = 0; k < p; ++k) {
    (*vec1)[k] = V[k * p + order[0]];
    (*vec2)[k] = V[k * p + order[1]];
  }
}

// w = cov * v without forming the covariance: Xc' (Xc v) / (n-1).
void cov_apply(const std::vector<double>& xc, std::size_t n, std::size_t p,
               const std::vector<double>& v, std::vector<double>& w,
               std::vector<double>& scratch_n) {
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    const double* row = xc.data() + i * p;
    for (std::size_t j = 0; j < p; ++j) s += row[j] * v[j];
    scratch_n[i] = s;
  }
  std::fill(w.begin(), w.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = xc.data() + i * p;
    double s = scratch_n[i];
    for (std::size_t j = 0; j < p; ++j) w[j] += row[j] * s;
  }
  for (std::size_t j = 0; j < p; ++j) w[j] /= static_cast<double>(n - 1);
}

double power_iterate(const std::vector<double>& xc, std::size_t n, std::size_t p,
                     std::vector<double>& v, const std::vector<double>* orthogonal_to) {
  std::vector<double> w(p), scratch(n);
  double eig = 0.0;
  for (int iter = 0; iter < 5000; ++iter) {
    cov_apply(xc, n, p, v, w, scratch);
    if (orthogonal_to) {
      double dot = 0.0;
      for (std::size_t j = 0; j < p; ++j) dot += w[j] * (*orthogonal_to)[j];
      for (std::size_t j = 0; j < p; ++j) w[j] -= dot * (*orthogonal_to)[j];
    }
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) break;  // v landed in the null space; keep the last iterate
    double delta = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      double next = w[j] / norm;
      delta = std::max(delta, std::abs(next - v[j]));
      v[j] = next;
    }
    eig = norm;
    if (delta < 1e-9) break;
  }
  return eig;
}

}  // namespace

Pca2 pca2(const DataMatrix& data) {
  if (data.p < 2) throw Error("pca2: need at least 2 columns");
  if (data.n < 2) throw Error("pca2: need at least 2 rows");
  std::size_t n = data.n, p = data.p;

  std::vector<double> xc(data.values);
  for (std::size_t j = 0; j < p; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += xc[i * p + j];
    mean /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) xc[i * p + j] -= mean;
  }

  double total_variance = 0.0;
  for (double v : xc) total_variance += v * v;
  total_variance /= static_cast<double>(n - 1);
  if (total_variance <= 0.0) throw DegenerateDataError("pca2: data has zero variance");

  Pca2 out;
  double eig[2];
  if (p <= 500) {
    std::vector<double> cov(p * p, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double* row = xc.data() + i * p;
      for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a; b < p; ++b) cov[a * p + b] += row[a] * row[b];
    }
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a; b < p; ++b) {
        cov[a * p + b] /= static_cast<double>(n - 1);
        cov[b * p + a] = cov[a * p + b];
      }
    jacobi_top2(std::move(cov), p, eig, &out.component1, &out.component2);
  } else {
    out.component1.assign(p, 0.0);
    out.component1[0] = 1.0;
    eig[0] = power_iterate(xc, n, p, out.component1, nullptr);
    out.component2.assign(p, 0.0);
    out.component2[1] = 1.0;
    {
      double dot = 0.0;
      for (std::size_t j = 0; j < p; ++j) dot += out.component2[j] * out.component1[j];
      for (std::size_t j = 0; j < p; ++j) out.component2[j] -= dot * out.component1[j];
      double norm = 0.0;
      for (double x : out.component2) norm += x * x;
      norm = std::sqrt(norm);
      if (norm > 0.0)
        for (double& x : out.component2) x /= norm;
    }
    eig[1] = power_iterate(xc, n, p, out.component2, &out.component1);
  }

  fix_sign(out.component1);
  fix_sign(out.component2);
  out.fraction1 = std::max(eig[0], 0.0) / total_variance;
  out.fraction2 = std::max(eig[1], 0.0) / total_variance;

  out.projection.resize(n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = xc.data() + i * p;
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      s1 += row[j] * out.component1[j];
      s2 += row[j] * out.component2[j];
    }
    out.projection[i * 2] = s1;
    out.projection[i * 2 + 1] = s2;
  }
  return out;
}

}  // namespace ipdclust
