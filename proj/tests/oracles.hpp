#pragma once

// Brute-force oracles shared by the unit and acceptance tests. None of them
// calls the library routine it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

/// Lowest total degree of the real expansion of prod_i z_i^{nu_i} zbar_i^{mu_i}
/// summed over terms, by expanding (x + i y)^p (x - i y)^q with 64-bit
/// Gaussian-integer coefficients.
struct GaussInt {
  std::int64_t re = 0, im = 0;
  GaussInt operator*(GaussInt o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  GaussInt& operator+=(GaussInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  [[nodiscard]] bool zero() const { return re == 0 && im == 0; }
};

using Poly = std::map<std::vector<int>, GaussInt>;  // exponents (x1, y1, x2, y2, ...)

inline Poly multiply(const Poly& p, const Poly& q) {
  Poly out;
  for (const auto& [e1, c1] : p)
    for (const auto& [e2, c2] : q) {
      auto e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      out[e] += c1 * c2;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.zero(); });
  return out;
}

inline Poly linear(std::size_t n, std::size_t var, bool conj) {
  std::vector<int> ex(2 * n, 0), ey(2 * n, 0);
  ex[2 * var] = 1;
  ey[2 * var + 1] = 1;
  return Poly{{ex, {1, 0}}, {ey, {0, conj ? -1 : 1}}};
}

/// Real expansion of sum_i z_i^{a_i+b_i} zbar_i^{b_i}.
inline Poly family_expansion(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  Poly total;
  for (std::size_t i = 0; i < n; ++i) {
    Poly term{{std::vector<int>(2 * n, 0), {1, 0}}};
    for (int k = 0; k < a[i] + b[i]; ++k) term = multiply(term, linear(n, i, false));
    for (int k = 0; k < b[i]; ++k) term = multiply(term, linear(n, i, true));
    for (const auto& [e, c] : term) total[e] += c;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second.zero(); });
  return total;
}

inline int lowest_degree(const Poly& p) {
  int best = 1 << 30;
  for (const auto& [e, c] : p) best = std::min(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

/// Closest p/q with 1 <= q <= max_den by exhaustive search; ties go to the
/// smaller denominator.
inline std::pair<long, long> nearest_fraction(double x, int max_den) {
  std::pair<long, long> best{std::lround(x), 1};
  double err = std::abs(x - static_cast<double>(best.first));
  for (long q = 1; q <= max_den; ++q) {
    const long p = std::lround(x * static_cast<double>(q));
    const double d = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
    if (d < err - 1e-15) {
      err = d;
      best = {p, q};
    }
  }
  const long g = std::gcd(best.first, best.second);
  return {best.first / g, best.second / g};
}

/// Smallest positive d with d divisible by every m_i (plain search).
inline long lcm_by_search(const std::vector<int>& m) {
  for (long d = 1;; ++d) {
    bool ok = true;
    for (int v : m) ok = ok && d % v == 0;
    if (ok) return d;
  }
}

/// All permutations sigma with x[sigma(i)] == y[i] for the paired data.
inline bool permutation_matches(const std::vector<std::pair<int, int>>& x, const std::vector<std::pair<int, int>>& y) {
  if (x.size() != y.size()) return false;
  std::vector<std::size_t> sigma(x.size());
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) ok = x[sigma[i]] == y[i];
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

/// Real Jacobian determinant of z -> z^{a+b} zbar^b at z by central differences.
inline double real_jacobian_det(int a, int b, std::complex<double> z, double h = 1e-6) {
  auto f = [&](std::complex<double> w) { return std::pow(w, a + b) * std::pow(std::conj(w), b); };
  const double s = std::max(1.0, std::abs(z)) * h;
  const auto fx = (f(z + s) - f(z - s)) / (2 * s);
  const auto fy = (f(z + std::complex<double>(0, s)) - f(z - std::complex<double>(0, s))) / (2 * s);
  return fx.real() * fy.imag() - fx.imag() * fy.real();
}

/// Every exponent pair (a, b) with a, b in [0, max] for n variables, except
/// all-zero a.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> grid(std::size_t n, int a_max, int b_max) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  std::vector<int> v(2 * n, 0);
  while (true) {
    std::vector<int> a(v.begin(), v.begin() + static_cast<long>(n)), b(v.begin() + static_cast<long>(n), v.end());
    if (std::any_of(a.begin(), a.end(), [](int x) { return x >= 1; })) {
      bool degenerate = false;
      for (std::size_t i = 0; i < n; ++i) degenerate = degenerate || (a[i] == 0 && b[i] == 0);
      if (!degenerate) out.emplace_back(a, b);
    }
    std::size_t i = 0;
    while (i < v.size() && v[i] == (i < n ? a_max : b_max)) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

}  // namespace oracle
