#pragma once

// Log-log exponent fits and rational snapping.

#include "brieskorn/rational.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace brieskorn::numeric {

inline constexpr int kSnapDenominator = 12;
inline constexpr double kSnapWindow = 0.02;

/// Closest fraction p/q with 1 <= q <= max_den, via continued-fraction
/// convergents and semiconvergents. Ties go to the smaller denominator.
inline Rational best_rational_approximation(double x, int max_den = kSnapDenominator) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot approximate a non-finite value");
  if (max_den < 1) throw std::invalid_argument("denominator bound must be >= 1");
  const double sign = x < 0 ? -1.0 : 1.0;
  double frac = std::abs(x);
  // Convergents h/k of the continued fraction of |x|.
  std::int64_t h_prev = 1, k_prev = 0;
  std::int64_t h = static_cast<std::int64_t>(std::floor(frac)), k = 1;
  double rem = frac - std::floor(frac);
  std::int64_t best_h = h, best_k = k;
  double best_err = std::abs(frac - static_cast<double>(h));
  auto consider = [&](std::int64_t p, std::int64_t q) {
    if (q < 1 || q > max_den) return;
    const double err = std::abs(frac - static_cast<double>(p) / static_cast<double>(q));
    if (err < best_err - 1e-15 || (std::abs(err - best_err) <= 1e-15 && q < best_k)) {
      best_err = err;
      best_h = p;
      best_k = q;
    }
  };
  for (int iter = 0; iter < 64 && rem > 1e-15; ++iter) {
    const double inv = 1.0 / rem;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    rem = inv - static_cast<double>(a);
    // Semiconvergents (h_prev + j h) / (k_prev + j k) for j = 1..a.
    for (std::int64_t j = 1; j <= a; ++j) {
      const std::int64_t q = k_prev + j * k;
      if (q > max_den) break;
      consider(h_prev + j * h, q);
    }
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  return make_rational(static_cast<std::int64_t>(sign) * best_h, best_k);
}

/// best_rational_approximation if it lies within `window` of x.
inline std::optional<Rational> snap_rational(double x, int max_den = kSnapDenominator, double window = kSnapWindow) {
  if (!std::isfinite(x)) return std::nullopt;
  Rational r = best_rational_approximation(x, max_den);
  if (std::abs(to_double(r) - x) <= window) return r;
  return std::nullopt;
}

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::optional<Rational> rational_snap;
  bool infinite = false;  // the measured quantity vanished identically
  bool unstable = false;  // poor fit (r_squared below 0.99) or too few points

  friend bool operator==(const ExponentFit&, const ExponentFit&) = default;
};

/// Least squares of log(y) against log(x); pairs with y <= 0 are dropped.
inline ExponentFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit: x and y differ in length");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0 && y[i] > 0 && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  ExponentFit fit;
  if (lx.size() < 2) {
    fit.infinite = lx.empty();
    fit.unstable = true;
    return fit;
  }
  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit: x values are all equal");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0 ? 1.0 : std::min(1.0, (sxy * sxy) / (sxx * syy));
  fit.rational_snap = snap_rational(fit.slope);
  fit.unstable = fit.r_squared < 0.99;
  return fit;
}

/// 2^{-k} for k = first..last.
inline std::vector<double> dyadic_grid(int first, int last) {
  std::vector<double> out;
  for (int k = first; k <= last; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

}  // namespace brieskorn::numeric
