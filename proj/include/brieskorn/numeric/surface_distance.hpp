#pragma once

// Distance from a point of C^2 to the surface X, and chart coordinates of
// points of X. Both work in the closed-form parameterization, scaled by |p|
// so that tiny radii keep full relative precision.

#include "brieskorn/numeric/minimize.hpp"
#include "brieskorn/surface_geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace brieskorn::numeric {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

inline int positive_mod(long v, long m) { return static_cast<int>(((v % m) + m) % m); }

/// Position of a surface point in the chart. `unrolled` runs over
/// [0, period) and is continuous along the connected component: for
/// a_1 >= 1 it is theta plus 2 pi times the position of the branch in the
/// monodromy cycle k -> k + a_2 (mod a_1); for a_1 = 0 it is the phase of z_1.
struct ChartCoord {
  int component = 0;
  int sheet = 0;
  double angle = 0.0;  // theta (a_1 >= 1) or the phase of z_1 (a_1 = 0), in [0, 2 pi)
  double unrolled = 0.0;
  double period = kTwoPi;
  double log_radius = 0.0;
};

inline ChartCoord chart_coordinates(const ExponentData& e, const ComplexPoint& p) {
  e.check_dim(p.size());
  const auto o = detail::orient(e);
  const Complex z1 = p[o.slot[0]];
  const Complex z2 = p[o.slot[1]];
  ChartCoord c;
  c.log_radius = 0.5 * std::log(std::norm(z1) + std::norm(z2));
  if (o.a1 >= 1) {
    const double theta = wrap_angle(std::arg(z2));
    const double raw = (o.a1 * std::arg(z1) - std::numbers::pi - o.a2 * theta) / kTwoPi;
    c.sheet = positive_mod(std::lround(raw), o.a1);
    const int g = std::gcd(o.a1, o.a2);
    const int cycle = o.a1 / g;
    c.component = c.sheet % g;
    int pos = 0;
    for (int k = c.component; k != c.sheet; k = (k + o.a2) % o.a1) ++pos;
    c.angle = theta;
    c.unrolled = theta + kTwoPi * pos;
    c.period = kTwoPi * cycle;
  } else {
    const double raw = (o.a2 * wrap_angle(std::arg(z2)) - std::numbers::pi) / kTwoPi;
    c.sheet = positive_mod(std::lround(raw), o.a2);
    c.component = c.sheet;
    c.angle = wrap_angle(std::arg(z1));
    c.unrolled = c.angle;
  }
  return c;
}

/// Modulus of the dominant coordinate: |z_2| when a_1 >= 1 or beta >= 1, else |z_1|.
inline bool chart_z2_leads(const ExponentData& e) {
  const auto o = detail::orient(e);
  return o.a1 >= 1 || o.m2() >= 2 * o.b1;
}

/// Surface point with dominant modulus r, chart angle and sheet.
inline ComplexPoint chart_point(const ExponentData& e, double r, double angle, int sheet) {
  const auto o = detail::orient(e);
  if (o.a1 >= 1) return parameterize_surface(e, r, angle, sheet);
  const double theta = (std::numbers::pi + kTwoPi * sheet) / o.a2;
  const double rho = chart_z2_leads(e) ? r : std::pow(r, 2.0 * o.b1 / o.m2());
  return parameterize_surface(e, rho, theta, 0, angle);
}

/// Euclidean distance from p to X. Multistart local search over the chart;
/// the origin is always a candidate. The search stops early once a point of
/// X within `stop_below` is found.
inline double distance_to_surface(const ExponentData& e, const ComplexPoint& p, double stop_below = 0.0) {
  e.check_dim(p.size());
  const auto o = detail::orient(e);
  const double s = std::sqrt(std::norm(p[0]) + std::norm(p[1]));
  if (s == 0.0) return 0.0;
  const Complex q1 = p[o.slot[0]] / s;
  const Complex q2 = p[o.slot[1]] / s;
  double best = 1.0;  // squared, scaled: the origin
  const double stop = (stop_below / s) * (stop_below / s);

  if (o.a1 >= 1) {
    const double alpha = static_cast<double>(o.m2()) / o.m1();
    const double c = std::exp((alpha - 1.0) * std::log(s));
    const double arg1 = std::arg(q1);
    auto objective = [&](const std::array<double, 2>& x) {
      const double u = std::abs(x[0]);
      const double theta = x[1];
      const double raw = (o.a1 * arg1 - std::numbers::pi - o.a2 * theta) / kTwoPi;
      const double k = std::round(raw);
      const double psi = (std::numbers::pi + o.a2 * theta + kTwoPi * k) / o.a1;
      const Complex z1 = std::polar(c * std::pow(u, alpha), psi);
      const Complex z2 = std::polar(u, theta);
      return std::norm(z1 - q1) + std::norm(z2 - q2);
    };
    std::vector<double> u_starts{std::abs(q2)};
    if (std::abs(q1) > 0 && c > 0) u_starts.push_back(std::min(2.0, std::pow(std::abs(q1) / c, 1.0 / alpha)));
    const double theta0 = std::arg(q2);
    for (int j = 0; j < 8 && best > stop; ++j) {
      for (double u0 : u_starts) {
        const double th = theta0 + kTwoPi * j / 8.0;
        const auto m = nelder_mead(objective, {u0, th}, {0.1 * std::max(u0, 0.05), 0.3}, 300);
        best = std::min(best, m.value);
      }
    }
  } else {
    // On ray j: |z_1| = |z_2|^beta. The dominant coordinate is the search
    // variable u in [0, 1 + |q|], the other has modulus c u^gamma.
    const double beta = static_cast<double>(o.m2()) / (2.0 * o.b1);
    const bool z2_leads = beta >= 1.0;
    const double gamma = z2_leads ? beta : 1.0 / beta;
    const double c = std::exp((gamma - 1.0) * std::log(s));
    const double r1 = std::abs(q1);
    for (int j = 0; j < o.a2; ++j) {
      const Complex dir = std::polar(1.0, (std::numbers::pi + kTwoPi * j) / o.a2);
      const double along = std::real(q2 * std::conj(dir));
      const double across2 = std::norm(q2) - along * along;
      auto objective = [&](double u) {
        const double w = c * std::pow(u, gamma);
        const double mod2 = z2_leads ? u : w;
        const double mod1 = z2_leads ? w : u;
        return (mod1 - r1) * (mod1 - r1) + (mod2 - along) * (mod2 - along) + across2;
      };
      // Unimodal pieces between the two one-coordinate optima.
      const double cut1 = std::clamp(z2_leads ? along : r1, 0.0, 2.0);
      const double cut2 = std::clamp(z2_leads ? (c > 0 ? std::pow(r1 / c, 1.0 / gamma) : 2.0)
                                              : (c > 0 ? std::pow(std::max(along, 0.0) / c, 1.0 / gamma) : 2.0),
                                     0.0, 2.0);
      std::array<double, 4> edges{0.0, std::min(cut1, cut2), std::max(cut1, cut2), 2.0};
      for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        if (edges[k + 1] <= edges[k]) continue;
        best = std::min(best, brent(objective, edges[k], edges[k + 1]).second);
      }
    }
  }
  return s * std::sqrt(std::max(0.0, best));
}

}  // namespace brieskorn::numeric
