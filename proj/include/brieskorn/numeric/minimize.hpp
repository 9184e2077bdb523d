#pragma once

// Derivative-free local minimization for the small (1-2 variable) problems
// of point-to-surface distance. One-dimensional problems use Brent's method
// from Boost.Math.

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace brieskorn::numeric {

struct Minimum2 {
  std::array<double, 2> x{};
  double value = 0.0;
};

/// Nelder-Mead on R^2 from x0 with initial simplex edge `step`.
template <class F>
Minimum2 nelder_mead(F&& f, std::array<double, 2> x0, std::array<double, 2> step, int max_evals = 400,
                     double ftol = 1e-30) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> s{x0, Point{x0[0] + step[0], x0[1]}, Point{x0[0], x0[1] + step[1]}};
  std::array<double, 3> v{f(s[0]), f(s[1]), f(s[2])};
  int evals = 3;
  auto lerp = [](const Point& a, const Point& b, double t) {
    return Point{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };
  while (evals < max_evals) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return v[i] < v[j]; });
    const Point best = s[idx[0]], mid = s[idx[1]], worst = s[idx[2]];
    const double vb = v[idx[0]], vm = v[idx[1]], vw = v[idx[2]];
    if (vw - vb <= ftol + 1e-14 * std::abs(vb)) break;
    const Point centroid{(best[0] + mid[0]) / 2, (best[1] + mid[1]) / 2};
    const Point refl = lerp(centroid, worst, -1.0);
    const double vr = f(refl);
    ++evals;
    Point next = refl;
    double vn = vr;
    if (vr < vb) {
      const Point exp = lerp(centroid, worst, -2.0);
      const double ve = f(exp);
      ++evals;
      if (ve < vr) {
        next = exp;
        vn = ve;
      }
    } else if (vr >= vm) {
      const Point con = vr < vw ? lerp(centroid, worst, -0.5) : lerp(centroid, worst, 0.5);
      const double vc = f(con);
      ++evals;
      if (vc < std::min(vr, vw)) {
        next = con;
        vn = vc;
      } else {
        // Shrink toward the best vertex.
        s = {best, lerp(best, mid, 0.5), lerp(best, worst, 0.5)};
        v = {vb, f(s[1]), f(s[2])};
        evals += 2;
        continue;
      }
    }
    s = {best, mid, next};
    v = {vb, vm, vn};
  }
  const auto it = std::min_element(v.begin(), v.end());
  return {s[static_cast<std::size_t>(it - v.begin())], *it};
}

/// Brent minimization on [lo, hi]; returns (argmin, value).
template <class F>
std::pair<double, double> brent(F&& f, double lo, double hi, int bits = 52) {
  std::uintmax_t iters = 200;
  return boost::math::tools::brent_find_minima(f, lo, hi, bits, iters);
}

}  // namespace brieskorn::numeric
