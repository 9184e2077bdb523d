#pragma once

// Tangent cone estimation by the rescaling criterion: v is tangent to X at 0
// iff d(t v, X) / t -> 0 as t -> 0.

#include "brieskorn/mixed_polynomial.hpp"
#include "brieskorn/numeric/point_cloud.hpp"
#include "brieskorn/numeric/surface_distance.hpp"
#include "brieskorn/surface_geometry.hpp"

#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace brieskorn::numeric {

using Direction = std::array<double, 4>;  // unit vector (x_1, y_1, x_2, y_2), canonical

inline Direction to_direction(const ComplexPoint& p) {
  Direction d{p[0].real(), p[0].imag(), p[1].real(), p[1].imag()};
  const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]);
  for (double& x : d) x /= n;
  return d;
}

inline ComplexPoint scaled_point(const Direction& v, double t) {
  return {Complex(t * v[0], t * v[1]), Complex(t * v[2], t * v[3])};
}

inline double chord2(const Direction& u, const Direction& v) {
  double diff = 0;
  for (std::size_t i = 0; i < 4; ++i) diff += (u[i] - v[i]) * (u[i] - v[i]);
  return diff;
}

inline double chord_to_angle(double c2) { return 2.0 * std::asin(std::min(1.0, std::sqrt(c2) / 2.0)); }

/// Great-circle angle; the chord form stays accurate for small angles.
inline double angle_between(const Direction& u, const Direction& v) { return chord_to_angle(chord2(u, v)); }

inline double set_distance(const Direction& v, const std::vector<Direction>& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& w : set) best = std::min(best, chord2(v, w));
  return chord_to_angle(best);
}

/// Two-sided angular Hausdorff distance between finite direction sets.
inline double angular_hausdorff(const std::vector<Direction>& x, const std::vector<Direction>& y) {
  if (x.empty() || y.empty()) return std::numeric_limits<double>::infinity();
  double h = 0;
  auto one_side = [&h](const std::vector<Direction>& from, const std::vector<Direction>& to) {
    for (const auto& v : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& w : to) best = std::min(best, chord2(v, w));
      h = std::max(h, best);
    }
  };
  one_side(x, y);
  one_side(y, x);
  return chord_to_angle(h);
}

/// Dense sample of a symbolic cone kind as unit directions (canonical
/// coordinates). WholeSurface uses the link of X at radius 1.
inline std::vector<Direction> reference_directions(const ExponentData& e, ConeKind kind, std::size_t samples = 2048) {
  std::vector<Direction> out;
  const auto o = detail::orient(e);
  switch (kind) {
    case ConeKind::PlaneZ1Zero:
    case ConeKind::PlaneZ2Zero: {
      const std::size_t slot = kind == ConeKind::PlaneZ1Zero ? 1 : 0;
      for (std::size_t i = 0; i < samples; ++i) {
        Direction d{};
        const double a = kTwoPi * static_cast<double>(i) / static_cast<double>(samples);
        d[2 * slot] = std::cos(a);
        d[2 * slot + 1] = std::sin(a);
        out.push_back(d);
      }
      break;
    }
    case ConeKind::RayUnion:
      for (int j = 0; j < o.a2; ++j) {
        ComplexPoint p(2);
        p[o.slot[1]] = std::polar(1.0, (std::numbers::pi + kTwoPi * j) / o.a2);
        out.push_back(to_direction(p));
      }
      break;
    case ConeKind::WholeSurface: {
      const int sheets = chart_sheet_count(e);
      const double rho = rho_for_radius(e, 1.0);
      const std::size_t per = std::max<std::size_t>(16, samples / static_cast<std::size_t>(sheets));
      for (int k = 0; k < sheets; ++k) {
        for (std::size_t i = 0; i < per; ++i) {
          const double a = kTwoPi * static_cast<double>(i) / static_cast<double>(per);
          if (o.a1 >= 1) {
            out.push_back(to_direction(parameterize_surface(e, rho, a, k)));
          } else {
            const double theta = (std::numbers::pi + kTwoPi * k) / o.a2;
            out.push_back(to_direction(parameterize_surface(e, rho, theta, 0, a)));
          }
        }
      }
      break;
    }
  }
  return out;
}

struct ConeEstimateOptions {
  std::vector<double> scales;  // decreasing; default 2^{-8k}, k = 1..12
  double tol = 1e-2;           // bound on d(t v, X)/t at the smallest scale
  double tol_angle = 0.05;     // single-linkage clustering radius
  std::size_t candidates = 4096;
  std::size_t verify = 64;     // candidates checked at every scale
  std::size_t screen = 512;    // random sphere directions checked for missed components
  std::uint64_t seed = 1;

  [[nodiscard]] std::vector<double> effective_scales() const {
    if (!scales.empty()) return scales;
    std::vector<double> s;
    for (int k = 1; k <= 12; ++k) s.push_back(std::ldexp(1.0, -8 * k));
    return s;
  }
};

struct ConeEstimate {
  std::vector<Direction> directions;
  std::size_t candidates_rejected = 0;
  std::size_t verified = 0;
  std::size_t verify_failures = 0;
  std::size_t screen_hits = 0;
  std::size_t screen_unexplained = 0;
  std::size_t clusters = 0;
  double max_cluster_diameter = 0.0;
  ConeKind kind = ConeKind::WholeSurface;
  int ray_count = 0;
  int dimension = 2;
  double hausdorff_to_symbolic = std::numeric_limits<double>::infinity();
  double max_initial_form = 0.0;  // |lowest-degree form| on the estimated directions
  ConeKind symbolic_kind = ConeKind::WholeSurface;
  bool matches = false;
  bool stable = false;
  std::string criterion;
};

/// The rescaled distances d(t_k v, X)/t_k over the scales.
inline std::vector<double> rescaled_distances(const ExponentData& e, const Direction& v,
                                              const std::vector<double>& scales) {
  std::vector<double> out;
  out.reserve(scales.size());
  for (double t : scales) out.push_back(distance_to_surface(e, scaled_point(v, t)) / t);
  return out;
}

/// Non-increasing across scales (up to minimizer noise) and below tol at the end.
inline bool passes_rescaling(const std::vector<double>& ratios, double tol) {
  for (std::size_t k = 1; k < ratios.size(); ++k)
    if (ratios[k] > ratios[k - 1] * (1.0 + 1e-6) + 1e-12) return false;
  return !ratios.empty() && ratios.back() <= tol;
}

inline ConeEstimate estimate_tangent_cone(const ExponentData& e, const ConeEstimateOptions& opt = {}) {
  detail::require_surface(e);
  const auto o = detail::orient(e);
  const auto scales = opt.effective_scales();
  const double t_small = scales.back();
  ConeEstimate est;
  est.criterion = "d(t v, X)/t non-increasing over " + std::to_string(scales.size()) +
                  " scales and <= " + std::to_string(opt.tol) + " at the smallest";

  // Candidates: secant directions of surface points at the smallest scale.
  const int sheets = chart_sheet_count(e);
  const double rho = rho_for_radius(e, t_small);
  const std::size_t per = std::max<std::size_t>(8, opt.candidates / static_cast<std::size_t>(sheets));
  std::vector<Direction> candidates;
  for (int k = 0; k < sheets; ++k) {
    for (std::size_t i = 0; i < per; ++i) {
      // Sheets interleave so that coincident directions do not repeat.
      const double a = kTwoPi * (static_cast<double>(i) + (k + 0.5) / sheets) / static_cast<double>(per);
      ComplexPoint p = o.a1 >= 1 ? parameterize_surface(e, rho, a, k)
                                 : parameterize_surface(e, rho, (std::numbers::pi + kTwoPi * k) / o.a2, 0, a);
      candidates.push_back(to_direction(p));
    }
  }
  for (const auto& v : candidates) {
    if (distance_to_surface(e, scaled_point(v, t_small), 0.5 * opt.tol * t_small) / t_small <= opt.tol) {
      est.directions.push_back(v);
    } else {
      ++est.candidates_rejected;
    }
  }

  // Full multi-scale check on an evenly spaced subsample.
  if (!est.directions.empty()) {
    const std::size_t stride = std::max<std::size_t>(1, est.directions.size() / opt.verify);
    for (std::size_t i = 0; i < est.directions.size(); i += stride) {
      ++est.verified;
      if (!passes_rescaling(rescaled_distances(e, est.directions[i], scales), opt.tol)) ++est.verify_failures;
    }
  }

  // Screen random sphere directions for tangent directions the candidates missed.
  Rng rng(opt.seed);
  boost::random::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t i = 0; i < opt.screen; ++i) {
    Direction v{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    for (double& x : v) x /= n;
    if (distance_to_surface(e, scaled_point(v, t_small), 0.5 * opt.tol * t_small) / t_small > opt.tol) continue;
    ++est.screen_hits;
    if (est.directions.empty() || set_distance(v, est.directions) > opt.tol_angle) ++est.screen_unexplained;
  }

  // Single-linkage clusters.
  const std::size_t n = est.directions.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const double link2 = 4.0 * std::pow(std::sin(opt.tol_angle / 2.0), 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (chord2(est.directions[i], est.directions[j]) <= link2) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  est.clusters = groups.size();
  double diam2 = 0;
  for (const auto& g : groups)
    for (std::size_t x = 0; x < g.size() && diam2 <= link2; ++x)
      for (std::size_t y = x + 1; y < g.size(); ++y) diam2 = std::max(diam2, chord2(est.directions[g[x]], est.directions[g[y]]));
  // Exact only while every cluster is tiny; otherwise a lower bound above tol_angle.
  est.max_cluster_diameter = chord_to_angle(diam2);

  // Kind: tiny clusters are rays; otherwise the closest 2-dimensional model.
  if (n > 0 && est.max_cluster_diameter <= opt.tol_angle) {
    est.kind = ConeKind::RayUnion;
    est.dimension = 1;
    est.ray_count = static_cast<int>(groups.size());
  } else if (n > 0) {
    // Coarse subsample: the candidate models differ by O(1) angles.
    std::vector<Direction> coarse;
    for (std::size_t i = 0; i < n; i += std::max<std::size_t>(1, n / 512)) coarse.push_back(est.directions[i]);
    double best = std::numeric_limits<double>::infinity();
    for (ConeKind k : {ConeKind::PlaneZ1Zero, ConeKind::PlaneZ2Zero, ConeKind::WholeSurface}) {
      const double h = angular_hausdorff(coarse, reference_directions(e, k, 512));
      if (h < best) {
        best = h;
        est.kind = k;
      }
    }
  }

  const auto symbolic = tangent_cone(e);
  est.symbolic_kind = symbolic.kind;
  if (n > 0) est.hausdorff_to_symbolic = angular_hausdorff(est.directions, reference_directions(e, symbolic.kind));

  const auto lowest = initial_form(build_family(e));
  for (const auto& v : est.directions) {
    const ComplexPoint p = scaled_point(v, 1.0);
    est.max_initial_form = std::max(est.max_initial_form, std::abs(evaluate(lowest, p)));
  }

  est.stable = n > 0 && est.verify_failures == 0 && est.screen_unexplained == 0;
  const bool count_ok = symbolic.kind != ConeKind::RayUnion ||
                        est.ray_count == static_cast<int>(symbolic.rays.size());
  est.matches = est.stable && est.kind == symbolic.kind && count_ok && est.hausdorff_to_symbolic <= 1e-2;
  return est;
}

}  // namespace brieskorn::numeric
