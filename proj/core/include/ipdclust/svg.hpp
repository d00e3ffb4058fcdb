#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ipdclust/types.hpp"

namespace ipdclust {

// Scatter plot of n (x,y) points colored by cluster: one circle per point, a
// fixed 12-color palette cycling beyond 12 clusters, an axes box, and a
// legend row per cluster with its size. Byte-deterministic for fixed input.
std::string svg_scatter(const std::vector<double>& points_xy, std::size_t n,
                        const ClusterAssignment& assignment);

void render_svg_scatter(const std::vector<double>& points_xy, std::size_t n,
                        const ClusterAssignment& assignment, const std::string& path);

}  // namespace ipdclust
