#pragma once

#include "brieskorn/numeric/surface_distance.hpp"
#include "brieskorn/surface_geometry.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace brieskorn::numeric {

using Rng = boost::random::mt19937_64;

/// Points of R^{2n} stored as C^n in canonical order, with cached radii and,
/// for surface samples, chart coordinates.
struct PointCloud {
  std::vector<ComplexPoint> points;
  std::vector<double> radii;
  std::vector<ChartCoord> charts;  // empty, or one per point
  std::uint64_t seed = 0;
  std::string source;

  [[nodiscard]] std::size_t size() const { return points.size(); }

  void add(const ComplexPoint& p, std::optional<ChartCoord> chart = std::nullopt) {
    double r2 = 0;
    for (const auto& z : p) r2 += std::norm(z);
    points.push_back(p);
    radii.push_back(std::sqrt(r2));
    if (chart) charts.push_back(*chart);
  }

  [[nodiscard]] bool has_charts() const { return !points.empty() && charts.size() == points.size(); }
};

/// Radii log-uniform in [r_min, r_max]; branch/ray and angle uniform.
inline PointCloud sample_surface(const ExponentData& e, std::size_t count, double r_min, double r_max,
                                 std::uint64_t seed) {
  detail::require_surface(e);
  if (!(r_min > 0.0) || !(r_max > r_min)) throw std::invalid_argument("sample_surface: need 0 < r_min < r_max");
  const auto o = detail::orient(e);
  Rng rng(seed);
  boost::random::uniform_real_distribution<double> log_r(std::log(r_min), std::log(r_max));
  boost::random::uniform_real_distribution<double> angle(0.0, kTwoPi);
  boost::random::uniform_int_distribution<int> sheet(0, chart_sheet_count(e) - 1);
  PointCloud cloud;
  cloud.seed = seed;
  cloud.source = "parameterize_surface " + e.describe();
  cloud.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double rho = rho_for_radius(e, std::exp(log_r(rng)));
    const int k = sheet(rng);
    const double phi = angle(rng);
    ComplexPoint p;
    if (o.a1 >= 1) {
      p = parameterize_surface(e, rho, phi, k);
    } else {
      const double theta = (std::numbers::pi + kTwoPi * k) / o.a2;
      p = parameterize_surface(e, rho, theta, 0, phi);
    }
    cloud.add(p, chart_coordinates(e, p));
  }
  return cloud;
}

/// Columns x1,y1,x2,y2,...,radius with 17 significant digits.
inline void write_csv(std::ostream& os, const PointCloud& cloud) {
  const std::size_t n = cloud.points.empty() ? 2 : cloud.points.front().size();
  for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << "x" << i + 1 << ",y" << i + 1;
  os << ",radius\n";
  os << std::setprecision(17);
  for (std::size_t k = 0; k < cloud.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i)
      os << (i ? "," : "") << cloud.points[k][i].real() << "," << cloud.points[k][i].imag();
    os << "," << cloud.radii[k] << "\n";
  }
}

}  // namespace brieskorn::numeric
