#pragma once

// Order of contact between arcs and the horn exponent beta.

#include "brieskorn/numeric/fit.hpp"
#include "brieskorn/numeric/point_cloud.hpp"
#include "brieskorn/surface_geometry.hpp"

#include <map>

namespace brieskorn::numeric {

/// gamma_1 - gamma_2 as a coefficient series; equal terms cancel exactly.
inline std::vector<ArcTerm> arc_difference(const ArcSpec& x, const ArcSpec& y) {
  std::map<Rational, std::array<double, 4>> acc;
  for (const auto& t : x.terms()) {
    auto& c = acc[t.exponent];
    for (std::size_t i = 0; i < 4; ++i) c[i] += t.coeff[i];
  }
  for (const auto& t : y.terms()) {
    auto& c = acc[t.exponent];
    for (std::size_t i = 0; i < 4; ++i) c[i] -= t.coeff[i];
  }
  std::vector<ArcTerm> out;
  for (const auto& [q, c] : acc)
    if (c[0] != 0 || c[1] != 0 || c[2] != 0 || c[3] != 0) out.push_back({c, q});
  return out;
}

inline double series_norm(const std::vector<ArcTerm>& terms, double t) {
  std::array<double, 4> v{};
  for (const auto& term : terms) {
    const double s = std::pow(t, to_double(term.exponent));
    for (std::size_t i = 0; i < 4; ++i) v[i] += term.coeff[i] * s;
  }
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

inline double arc_distance(const ArcSpec& x, const ArcSpec& y, double t) {
  return series_norm(arc_difference(x, y), t);
}

/// Slope of log ||gamma_1(t) - gamma_2(t)|| against log t.
inline ExponentFit contact_order(const ArcSpec& x, const ArcSpec& y, const std::vector<double>& t_grid) {
  if (t_grid.size() < 12) throw std::invalid_argument("contact_order needs at least 12 grid points");
  const auto diff = arc_difference(x, y);
  if (diff.empty()) {
    ExponentFit fit;
    fit.infinite = true;
    fit.slope = std::numeric_limits<double>::infinity();
    return fit;
  }
  std::vector<double> d;
  d.reserve(t_grid.size());
  for (double t : t_grid) d.push_back(series_norm(diff, t));
  return fit_loglog(t_grid, d);
}

/// Default grid for contact fits: 2^{-4} .. 2^{-16}.
inline std::vector<double> default_t_grid() { return dyadic_grid(4, 16); }

/// Arc of X parameterized so that |gamma(t)| ~ t. `sheet` selects the
/// branch (a_1 >= 1) or the z_2 ray (a_1 = 0); `angle` is theta or the
/// z_1 phase respectively.
inline ArcSpec chart_arc(const ExponentData& e, int sheet, double angle) {
  const auto o = detail::orient(e);
  if (o.a1 >= 1) {
    if (sheet < 0 || sheet >= o.a1) throw std::invalid_argument("chart_arc: branch out of range");
    const Rational alpha = make_rational(o.m2(), o.m1());
    const Complex z1 = std::polar(1.0, (std::numbers::pi + o.a2 * angle + kTwoPi * sheet) / o.a1);
    return detail::two_term_arc(o, true, std::polar(1.0, angle), z1, alpha);
  }
  if (sheet < 0 || sheet >= o.a2) throw std::invalid_argument("chart_arc: ray out of range");
  const Complex ray = std::polar(1.0, (std::numbers::pi + kTwoPi * sheet) / o.a2);
  const Rational beta = make_rational(o.m2(), 2 * o.b1);
  if (beta >= 1) return detail::two_term_arc(o, true, ray, std::polar(1.0, angle), beta);
  return detail::two_term_arc(o, false, std::polar(1.0, angle), ray, 1 / beta);
}

struct BetaEstimate {
  ExponentFit fit;  // the pair achieving the minimum snapped order
  std::size_t pairs = 0;
  std::size_t unstable_pairs = 0;
};

/// Minimum contact order over random arc pairs drawn inside one connected
/// component (same z_2 ray, or the same monodromy cycle of branches).
inline BetaEstimate estimate_beta(const ExponentData& e, std::size_t arc_pairs, std::uint64_t seed) {
  detail::require_surface(e);
  if (arc_pairs == 0) throw std::invalid_argument("estimate_beta needs at least one pair");
  const auto o = detail::orient(e);
  Rng rng(seed);
  boost::random::uniform_real_distribution<double> angle(0.0, kTwoPi);
  boost::random::uniform_int_distribution<int> sheet(0, chart_sheet_count(e) - 1);
  const auto grid = default_t_grid();
  BetaEstimate out;
  bool have = false;
  for (std::size_t i = 0; i < arc_pairs; ++i) {
    const int s1 = sheet(rng);
    int s2 = s1;
    if (o.a1 >= 1) {
      // Any branch in the same cycle k -> k + a_2 (mod a_1).
      const int g = std::gcd(o.a1, o.a2);
      boost::random::uniform_int_distribution<int> step(0, o.a1 / g - 1);
      s2 = (s1 + step(rng) * o.a2) % o.a1;
    }
    const auto fit = contact_order(chart_arc(e, s1, angle(rng)), chart_arc(e, s2, angle(rng)), grid);
    ++out.pairs;
    if (fit.unstable || !fit.rational_snap) {
      ++out.unstable_pairs;
      continue;
    }
    if (!have || *fit.rational_snap < *out.fit.rational_snap) {
      out.fit = fit;
      have = true;
    }
  }
  if (!have) out.fit.unstable = true;
  return out;
}

}  // namespace brieskorn::numeric
