#pragma once

#include "brieskorn/exponent_data.hpp"
#include "brieskorn/rational.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brieskorn {

/// coeff * prod_i z_i^{nu_i} conj(z_i)^{mu_i}
struct MixedMonomial {
  GaussianRational coeff{1};
  std::vector<int> nu;
  std::vector<int> mu;

  MixedMonomial() = default;
  MixedMonomial(GaussianRational c, std::vector<int> holo, std::vector<int> anti)
      : coeff(std::move(c)), nu(std::move(holo)), mu(std::move(anti)) {
    if (nu.size() != mu.size()) throw std::invalid_argument("monomial exponent vectors differ in length");
    for (std::size_t i = 0; i < nu.size(); ++i)
      if (nu[i] < 0 || mu[i] < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  }

  [[nodiscard]] std::size_t n() const { return nu.size(); }
  [[nodiscard]] int degree() const {
    return std::accumulate(nu.begin(), nu.end(), 0) + std::accumulate(mu.begin(), mu.end(), 0);
  }
  [[nodiscard]] bool is_constant() const { return degree() == 0; }

  friend MixedMonomial operator*(const MixedMonomial& x, const MixedMonomial& y) {
    if (x.n() != y.n()) throw std::invalid_argument("dimension mismatch in monomial product");
    MixedMonomial out = x;
    out.coeff = x.coeff * y.coeff;
    for (std::size_t i = 0; i < x.n(); ++i) {
      out.nu[i] += y.nu[i];
      out.mu[i] += y.mu[i];
    }
    return out;
  }
};

/// Finite sum of mixed monomials with merged exponent pairs and no constant term.
class MixedPolynomial {
 public:
  explicit MixedPolynomial(std::size_t n) : n_(n) {}
  MixedPolynomial(std::size_t n, const std::vector<MixedMonomial>& terms) : n_(n) {
    for (const auto& t : terms) add(t);
  }

  void add(const MixedMonomial& t) {
    if (t.n() != n_) throw std::invalid_argument("dimension mismatch: monomial in wrong number of variables");
    if (t.coeff.is_zero()) return;
    if (t.is_constant()) throw std::invalid_argument("germ must vanish at the origin: constant term");
    auto key = std::make_pair(t.nu, t.mu);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), t.coeff);
    } else {
      it->second += t.coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] std::vector<MixedMonomial> terms() const {
    std::vector<MixedMonomial> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.emplace_back(c, key.first, key.second);
    return out;
  }

  friend bool operator==(const MixedPolynomial& x, const MixedPolynomial& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
  }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::size_t n_;
  std::map<Key, GaussianRational> terms_;
};

/// sum_i z_i^{a_i+b_i} conj(z_i)^{b_i}, in canonical coordinate order.
inline MixedPolynomial build_family(const ExponentData& e) {
  MixedPolynomial f(e.n());
  for (std::size_t i = 0; i < e.n(); ++i) {
    std::vector<int> nu(e.n(), 0), mu(e.n(), 0);
    nu[i] = e.a(i) + e.b(i);
    mu[i] = e.b(i);
    f.add(MixedMonomial(GaussianRational(1), nu, mu));
  }
  return f;
}

/// Holomorphic Pham-Brieskorn polynomial sum_i z_i^{c_i}; every c_i >= 1.
inline MixedPolynomial build_brieskorn(const std::vector<int>& c) {
  MixedPolynomial g(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) throw std::invalid_argument("holomorphic exponents must be >= 1");
    std::vector<int> nu(c.size(), 0), mu(c.size(), 0);
    nu[i] = c[i];
    g.add(MixedMonomial(GaussianRational(1), nu, mu));
  }
  return g;
}

namespace detail {

/// Plain complex product; skips the inf/nan recovery of operator*.
inline Complex times(Complex x, Complex y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}
inline double times(double x, double y) { return x * y; }

template <class T>
inline T ipow(T z, int e) {
  T r(1.0);
  while (e > 0) {
    if (e & 1) r = times(r, z);
    z = times(z, z);
    e >>= 1;
  }
  return r;
}

inline Complex to_complex(const GaussianRational& c) { return {to_double(c.re), to_double(c.im)}; }

}  // namespace detail

inline Complex evaluate(const MixedMonomial& m, std::span<const Complex> z) {
  if (z.size() != m.n()) throw std::invalid_argument("dimension mismatch in evaluate");
  Complex v = detail::to_complex(m.coeff);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (m.nu[i]) v *= detail::ipow(z[i], m.nu[i]);
    if (m.mu[i]) v *= detail::ipow(std::conj(z[i]), m.mu[i]);
  }
  return v;
}

inline Complex evaluate(const MixedPolynomial& f, std::span<const Complex> z) {
  if (z.size() != f.n())
    throw std::invalid_argument("dimension mismatch: polynomial in " + std::to_string(f.n()) +
                                " variables evaluated at a point of dimension " + std::to_string(z.size()));
  Complex sum(0.0, 0.0);
  for (const auto& t : f.terms()) sum += evaluate(t, z);
  return sum;
}

/// Exact evaluation at a point with Gaussian-rational coordinates.
inline GaussianRational evaluate_exact(const MixedPolynomial& f, std::span<const GaussianRational> z) {
  if (z.size() != f.n()) throw std::invalid_argument("dimension mismatch in evaluate_exact");
  GaussianRational sum;
  for (const auto& t : f.terms()) {
    GaussianRational v = t.coeff;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (t.nu[i]) v *= ipow(z[i], static_cast<unsigned>(t.nu[i]));
      if (t.mu[i]) v *= ipow(z[i].conj(), static_cast<unsigned>(t.mu[i]));
    }
    sum += v;
  }
  return sum;
}

/// Fast evaluation of f_{a,b} at canonical coordinates.
inline Complex evaluate_family(const ExponentData& e, std::span<const Complex> z) {
  e.check_dim(z.size());
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double r2 = std::norm(z[i]);
    sum += detail::ipow(z[i], e.a(i)) * detail::ipow(r2, e.b(i));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Real-coordinate expansion. Variables are ordered (x_1, y_1, ..., x_n, y_n)
// with z_j = x_j + i y_j. Each coefficient is the complex value
// (real part, imaginary part) of the map germ R^{2n} -> R^2.

using RealPolynomial = std::map<std::vector<int>, GaussianRational>;

namespace detail {

inline Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// (x + i y)^nu (x - i y)^mu as a map from (deg_x, deg_y) to coefficient.
inline std::map<std::pair<int, int>, GaussianRational> expand_one(int nu, int mu) {
  static const std::array<GaussianRational, 4> powers_of_i = {
      GaussianRational(1), GaussianRational(0, 1), GaussianRational(-1), GaussianRational(0, -1)};
  std::map<std::pair<int, int>, GaussianRational> out;
  for (int k = 0; k <= nu; ++k) {
    for (int l = 0; l <= mu; ++l) {
      // i^k (-i)^l = i^(k + 3l)
      GaussianRational c = powers_of_i[(k + 3 * l) % 4];
      c *= GaussianRational(Rational(binomial(nu, k) * binomial(mu, l)));
      out[{nu + mu - k - l, k + l}] += c;
    }
  }
  return out;
}

}  // namespace detail

inline RealPolynomial real_expansion(const MixedPolynomial& f) {
  RealPolynomial out;
  const std::size_t n = f.n();
  for (const auto& t : f.terms()) {
    RealPolynomial partial;
    partial[std::vector<int>(2 * n, 0)] = t.coeff;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.nu[j] == 0 && t.mu[j] == 0) continue;
      const auto factor = detail::expand_one(t.nu[j], t.mu[j]);
      RealPolynomial next;
      for (const auto& [mono, c] : partial) {
        for (const auto& [deg, fc] : factor) {
          auto key = mono;
          key[2 * j] += deg.first;
          key[2 * j + 1] += deg.second;
          next[key] += c * fc;
        }
      }
      partial = std::move(next);
    }
    for (const auto& [mono, c] : partial) out[mono] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// Lowest total degree of the real Taylor expansion at the origin.
inline int multiplicity(const MixedPolynomial& f) {
  const auto expansion = real_expansion(f);
  if (expansion.empty()) throw std::invalid_argument("multiplicity of the zero polynomial");
  int best = std::numeric_limits<int>::max();
  for (const auto& [mono, c] : expansion) best = std::min(best, std::accumulate(mono.begin(), mono.end(), 0));
  return best;
}

/// Closed form min_i (a_i + 2 b_i) for family members.
inline int family_multiplicity(const ExponentData& e) {
  const auto m = e.multiplicities();
  return *std::min_element(m.begin(), m.end());
}

/// Sum of the terms of minimal total degree.
inline MixedPolynomial initial_form(const MixedPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
  const int m = multiplicity(f);
  MixedPolynomial out(f.n());
  for (const auto& t : f.terms())
    if (t.degree() == m) out.add(t);
  return out;
}

/// Rank of the real differential of f : R^{2n} -> R^2 at the origin.
inline int rank_at_origin(const MixedPolynomial& f) {
  const std::size_t cols = 2 * f.n();
  std::array<std::vector<Rational>, 2> rows{std::vector<Rational>(cols, 0), std::vector<Rational>(cols, 0)};
  for (const auto& [mono, c] : real_expansion(f)) {
    if (std::accumulate(mono.begin(), mono.end(), 0) != 1) continue;
    const auto col = static_cast<std::size_t>(std::find(mono.begin(), mono.end(), 1) - mono.begin());
    rows[0][col] = c.re;
    rows[1][col] = c.im;
  }
  const auto nonzero = [](const std::vector<Rational>& r) {
    return std::any_of(r.begin(), r.end(), [](const Rational& v) { return v != 0; });
  };
  if (!nonzero(rows[0]) && !nonzero(rows[1])) return 0;
  // Two rows: rank 2 iff some 2x2 minor is non-zero.
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = i + 1; j < cols; ++j)
      if (rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i] != 0) return 2;
  return 1;
}

/// The 2x2 matrix of z-, zbar-derivatives of the real and imaginary parts of
/// z^{a+b} zbar^b (scaled by 1/2), and its determinant.
struct JacobianTerm {
  std::array<std::array<Complex, 2>, 2> matrix{};
  Complex determinant{};
  /// (b^2 - (a+b)^2) / 2 * |z|^{2(a+2b-1)}
  double closed_form = 0.0;
};

inline JacobianTerm jacobian_term(int a, int b, Complex z) {
  if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("jacobian_term requires a, b >= 0 and a + b >= 1");
  using detail::ipow;
  const Complex zb = std::conj(z);
  const double s = a + b;
  // A = (a+b) z^{a+b-1} zb^b, B = b z^{b-1} zb^{a+b}, C = b z^{a+b} zb^{b-1}, D = (a+b) z^b zb^{a+b-1}
  const Complex A = s * ipow(z, a + b - 1) * ipow(zb, b);
  const Complex B = b == 0 ? Complex{} : double(b) * ipow(z, b - 1) * ipow(zb, a + b);
  const Complex C = b == 0 ? Complex{} : double(b) * ipow(z, a + b) * ipow(zb, b - 1);
  const Complex D = s * ipow(z, b) * ipow(zb, a + b - 1);
  JacobianTerm out;
  out.matrix = {{{0.5 * (A + B), 0.5 * (C + D)}, {0.5 * (A - B), 0.5 * (C - D)}}};
  out.determinant = out.matrix[0][0] * out.matrix[1][1] - out.matrix[0][1] * out.matrix[1][0];
  out.closed_form = 0.5 * (double(b) * b - s * s) * std::pow(std::norm(z), a + 2 * b - 1);
  return out;
}

/// True iff every coordinate determinant vanishes only at z_i = 0.
inline bool has_isolated_singularity(const ExponentData& e) {
  for (std::size_t i = 0; i < e.n(); ++i) {
    const int a = e.a(i), b = e.b(i);
    if (b * b - (a + b) * (a + b) == 0) return false;
  }
  return true;
}

inline std::string to_string(const MixedPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    std::string factors;
    for (std::size_t i = 0; i < t.n(); ++i) {
      const auto var = "z" + std::to_string(i + 1);
      if (t.nu[i] == t.mu[i] && t.nu[i] > 0) {
        factors += (factors.empty() ? "" : "*") + ("|" + var + "|");
        if (2 * t.nu[i] != 1) factors += "^" + std::to_string(2 * t.nu[i]);
        continue;
      }
      if (t.nu[i]) factors += (factors.empty() ? "" : "*") + var + (t.nu[i] > 1 ? "^" + std::to_string(t.nu[i]) : "");
      if (t.mu[i])
        factors += (factors.empty() ? "" : "*") + ("conj(" + var + ")") +
                   (t.mu[i] > 1 ? "^" + std::to_string(t.mu[i]) : "");
    }
    std::string coeff;
    if (t.coeff == GaussianRational(1)) {
      coeff = out.empty() ? "" : " + ";
    } else if (t.coeff == GaussianRational(-1)) {
      coeff = out.empty() ? "-" : " - ";
    } else {
      coeff = (out.empty() ? "" : " + ") + ("(" + to_string(t.coeff) + ")*");
    }
    out += coeff + factors;
  }
  return out;
}

}  // namespace brieskorn
