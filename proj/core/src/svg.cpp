#include "ipdclust/svg.hpp"

#include <cmath>
#include <cstdio>

#include "ipdclust/report.hpp"
#include "ipdclust/validation.hpp"

namespace ipdclust {

namespace {

const char* kPalette[12] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                            "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string svg_scatter(const std::vector<double>& points_xy, std::size_t n,
                        const ClusterAssignment& assignment) {
  if (points_xy.size() != n * 2) throw Error("svg_scatter: point buffer size is not n*2");
  if (assignment.size() != n) throw Error("svg_scatter: assignment length is not n");
  for (double v : points_xy)
    if (!std::isfinite(v)) throw Error("svg_scatter: non-finite coordinate");
  int K = num_clusters(assignment);
  if (K < 1) throw Error("svg_scatter: empty assignment");
  std::vector<int> sizes = cluster_sizes(assignment);

  const double width = 640.0, height = 480.0;
  const double left = 50.0, right = width - 160.0, top = 20.0, bottom = height - 40.0;

  double min_x = points_xy[0], max_x = points_xy[0];
  double min_y = points_xy[1], max_y = points_xy[1];
  for (std::size_t i = 0; i < n; ++i) {
    min_x = std::min(min_x, points_xy[i * 2]);
    max_x = std::max(max_x, points_xy[i * 2]);
    min_y = std::min(min_y, points_xy[i * 2 + 1]);
    max_y = std::max(max_y, points_xy[i * 2 + 1]);
  }
  auto map_x = [&](double x) {
    double range = max_x - min_x;
    if (range <= 0.0) return (left + right) / 2.0;
    return left + (x - min_x) / range * (right - left);
  };
  auto map_y = [&](double y) {
    double range = max_y - min_y;
    if (range <= 0.0) return (top + bottom) / 2.0;
    return bottom - (y - min_y) / range * (bottom - top);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  out += "<rect x=\"" + fmt2(left) + "\" y=\"" + fmt2(top) + "\" width=\"" +
         fmt2(right - left) + "\" height=\"" + fmt2(bottom - top) +
         "\" fill=\"white\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < n; ++i) {
    const char* color = kPalette[(assignment[i] - 1) % 12];
    out += "<circle cx=\"" + fmt2(map_x(points_xy[i * 2])) + "\" cy=\"" +
           fmt2(map_y(points_xy[i * 2 + 1])) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
  }
  for (int k = 1; k <= K; ++k) {
    double y = top + 14.0 + (k - 1) * 18.0;
    out += "<rect x=\"" + fmt2(right + 12.0) + "\" y=\"" + fmt2(y - 9.0) +
           "\" width=\"10\" height=\"10\" fill=\"" + std::string(kPalette[(k - 1) % 12]) +
           "\"/>\n";
    out += "<text x=\"" + fmt2(right + 28.0) + "\" y=\"" + fmt2(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\">cluster " + std::to_string(k) + " (" +
           std::to_string(sizes[k - 1]) + ")</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void render_svg_scatter(const std::vector<double>& points_xy, std::size_t n,
                        const ClusterAssignment& assignment, const std::string& path) {
  write_text_file(svg_scatter(points_xy, n, assignment), path);
}

}  // namespace ipdclust
