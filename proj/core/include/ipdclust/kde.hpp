#pragma once

#include <cstddef>

#include "ipdclust/types.hpp"

namespace ipdclust {

// Standard normal density.
double gaussian_kernel(double u);

// Gaussian-kernel density estimate at x from an m-point sample with
// bandwidth h > 0. Error on empty sample or non-positive bandwidth.
double kde_at(double x, const double* sample, std::size_t m, double h);

// P-hat for one member: f-hat(h/2) * h over that member's distances to the
// other m members (self excluded). Proportional to the member's local mass
// within radius h; only its argmax is consumed downstream.
double neighborhood_probability(const double* distances, std::size_t m, double h);

}  // namespace ipdclust
