#include "ipdclust/kde.hpp"

#include <cmath>

namespace ipdclust {

namespace {
// 1/sqrt(2*pi)
constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684758586311649;
}  // namespace

double gaussian_kernel(double u) { return kInvSqrt2Pi * std::exp(-0.5 * u * u); }

double kde_at(double x, const double* sample, std::size_t m, double h) {
  if (m == 0) throw Error("kde_at: empty sample");
  if (!(h > 0.0)) throw Error("kde_at: bandwidth must be positive");
  double s = 0.0;
  for (std::size_t k = 0; k < m; ++k) s += gaussian_kernel((x - sample[k]) / h);
  return s / (static_cast<double>(m) * h);
}

double neighborhood_probability(const double* distances, std::size_t m, double h) {
  return kde_at(h / 2.0, distances, m, h) * h;
}

}  // namespace ipdclust
