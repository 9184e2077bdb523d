#pragma once

// Residual checks: conjugation to the topological normal form, weighted
// homogeneity, and numeric recovery of the multiplicity.

#include "brieskorn/classifier.hpp"
#include "brieskorn/determinacy.hpp"
#include "brieskorn/mixed_polynomial.hpp"
#include "brieskorn/numeric/fit.hpp"
#include "brieskorn/numeric/point_cloud.hpp"

#include <boost/random/normal_distribution.hpp>

#include <cmath>
#include <limits>

namespace brieskorn::numeric {

/// Point with coordinates of modulus log-uniform in [2^-8, 1] and uniform phase.
inline ComplexPoint random_point(Rng& rng, std::size_t n) {
  boost::random::uniform_real_distribution<double> log_r(-8.0 * std::log(2.0), 0.0);
  boost::random::uniform_real_distribution<double> phase(0.0, kTwoPi);
  boost::random::uniform_int_distribution<int> axis(0, 9);
  ComplexPoint z(n);
  for (auto& c : z) c = axis(rng) == 0 ? Complex(0.0, 0.0) : std::polar(std::exp(log_r(rng)), phase(rng));
  return z;
}

/// max |g(phi(z)) - f(z)| / (1 + |f(z)|) over random z.
inline double verify_conjugation(const ExponentData& e, std::size_t samples, std::uint64_t seed) {
  const auto nf = topological_normal_form(e);
  Rng rng(seed);
  double worst = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const ComplexPoint z = random_point(rng, e.n());
    const Complex f = evaluate_family(e, z);
    const Complex g = nf.evaluate(apply_phi(e, z));
    worst = std::max(worst, std::abs(g - f) / (1.0 + std::abs(f)));
  }
  return worst;
}

/// max |f(lambda^{r_i} z_i) - lambda^d f(z)| / (|lambda^d f(z)| + 1e-300) over random (lambda, z).
inline double verify_weighted_homogeneity(const ExponentData& e, std::size_t samples, std::uint64_t seed) {
  const auto w = weighted_type(e);
  Rng rng(seed);
  boost::random::uniform_real_distribution<double> lam(0.5, 2.0);
  double worst = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double l = lam(rng);
    ComplexPoint z = random_point(rng, e.n());
    z[0] = std::polar(0.5, 1.0);  // keeps f(z) away from 0
    ComplexPoint scaled(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) scaled[i] = std::pow(l, to_double(w.r[i])) * z[i];
    const Complex lhs = evaluate_family(e, scaled);
    const Complex rhs = std::pow(l, to_double(w.d)) * evaluate_family(e, z);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300));
  }
  return worst;
}

struct MultiplicityEstimate {
  int value = 0;
  double min_slope = std::numeric_limits<double>::infinity();
  bool unstable = false;  // minimum slope not within 0.05 of an integer
};

/// Minimum over random unit rays v of the slope of log|f(t v)| against log t.
inline MultiplicityEstimate verify_multiplicity_numeric(const ExponentData& e, std::size_t rays, std::uint64_t seed) {
  Rng rng(seed);
  boost::random::normal_distribution<double> gauss(0.0, 1.0);
  const auto grid = dyadic_grid(20, 44);  // deep enough that degree m + 1 terms do not bend the fit
  MultiplicityEstimate out;
  for (std::size_t r = 0; r < rays; ++r) {
    ComplexPoint v(e.n());
    double norm = 0;
    for (auto& c : v) {
      c = Complex(gauss(rng), gauss(rng));
      norm += std::norm(c);
    }
    for (auto& c : v) c /= std::sqrt(norm);
    std::vector<double> values;
    for (double t : grid) {
      ComplexPoint p(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) p[i] = t * v[i];
      values.push_back(std::abs(evaluate_family(e, p)));
    }
    const auto fit = fit_loglog(grid, values);
    if (!fit.infinite) out.min_slope = std::min(out.min_slope, fit.slope);
  }
  out.value = static_cast<int>(std::lround(out.min_slope));
  out.unstable = !(std::abs(out.min_slope - out.value) <= 0.05);
  return out;
}

}  // namespace brieskorn::numeric
