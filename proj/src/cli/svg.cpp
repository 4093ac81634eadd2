#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>

#include "csv.hpp"
#include "hexwalk/error.hpp"

namespace hexwalk::cli {

namespace {

// Piecewise-linear blue -> cyan -> yellow -> red ramp.
std::array<int, 3> ramp(double u) {
  static constexpr std::array<std::array<double, 3>, 4> stops{{
      {30, 60, 200}, {0, 200, 220}, {250, 220, 40}, {220, 30, 30}}};
  u = std::clamp(u, 0.0, 1.0) * 3.0;
  const int i = std::min(2, static_cast<int>(u));
  const double f = u - i;
  std::array<int, 3> rgb{};
  for (int c = 0; c < 3; ++c) {
    rgb[static_cast<std::size_t>(c)] = static_cast<int>(
        std::lround(stops[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * (1 - f) +
                    stops[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)] * f));
  }
  return rgb;
}

}  // namespace

void write_heatmap_svg(const std::filesystem::path& path, const HexLattice& lattice,
                       const std::vector<double>& probability) {
  require(probability.size() == lattice.size(), ErrorKind::dimension_mismatch,
          "heatmap: distribution size does not match lattice");
  double xmin = std::numeric_limits<double>::max(), ymin = xmin;
  double xmax = std::numeric_limits<double>::lowest(), ymax = xmax;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Point2D r = HexLattice::position(lattice.label(i));
    xmin = std::min(xmin, r.x);
    xmax = std::max(xmax, r.x);
    ymin = std::min(ymin, r.y);
    ymax = std::max(ymax, r.y);
  }
  const double peak = *std::max_element(probability.begin(), probability.end());
  const double scale = 4.0;
  const double margin = 2.0;
  const double width = (xmax - xmin + 2 * margin) * scale;
  const double height = (ymax - ymin + 2 * margin) * scale;

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), ErrorKind::io, "cannot open " + path.string() + " for writing");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(width)
      << "\" height=\"" << format_number(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#10102a\"/>\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (probability[i] <= 0.0 || peak <= 0.0) continue;
    const Point2D r = HexLattice::position(lattice.label(i));
    const auto [red, green, blue] = ramp(probability[i] / peak);
    // SVG y grows downwards.
    out << "<circle cx=\"" << format_number((r.x - xmin + margin) * scale) << "\" cy=\""
        << format_number((ymax - r.y + margin) * scale) << "\" r=\"" << format_number(0.5 * scale)
        << "\" fill=\"rgb(" << red << ',' << green << ',' << blue << ")\"/>\n";
  }
  out << "</svg>\n";
  require(out.good(), ErrorKind::io, "write failed for " + path.string());
}

}  // namespace hexwalk::cli
