#pragma once

// Symbolic geometry of the mixed surfaces X = f^{-1}(0) in C^2.
//
// Coordinates: every point is returned in canonical order (ExponentData).
// "Oriented" coordinates additionally swap the two slots when a_1 >= 1 and
// m_1 > m_2, so that m_1 <= m_2 whenever a_1 >= 1.

#include "brieskorn/exponent_data.hpp"
#include "brieskorn/mixed_polynomial.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/verdict.hpp"

#include <boost/math/tools/roots.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brieskorn {

enum class SurfaceCase { T1, T2, T3, T4, T5 };

inline std::string_view to_string(SurfaceCase c) {
  switch (c) {
    case SurfaceCase::T1: return "T1";
    case SurfaceCase::T2: return "T2";
    case SurfaceCase::T3: return "T3";
    case SurfaceCase::T4: return "T4";
    case SurfaceCase::T5: return "T5";
  }
  return "?";
}

/// The case is always computed. `regular` marks germs that are smooth at 0
/// (a_i = 1, b_i = 0 for some i); obstruction procedures refuse them.
struct SurfaceType {
  SurfaceCase kind = SurfaceCase::T1;
  bool swapped = false;
  bool regular = false;

  [[nodiscard]] std::string tag() const {
    const std::string base(to_string(kind));
    return swapped ? "Swapped(" + base + ")" : base;
  }
  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

namespace detail {

inline void require_surface(const ExponentData& e) {
  if (e.n() != 2) throw std::invalid_argument("surface geometry needs n = 2, got n = " + std::to_string(e.n()));
}

// Exponents in oriented coordinates; slot[0], slot[1] are canonical indices.
struct Oriented {
  int a1, b1, a2, b2;
  std::array<std::size_t, 2> slot;
  [[nodiscard]] int m1() const { return a1 + 2 * b1; }
  [[nodiscard]] int m2() const { return a2 + 2 * b2; }
};

inline Oriented orient(const ExponentData& e) {
  require_surface(e);
  Oriented o{e.a(0), e.b(0), e.a(1), e.b(1), {0, 1}};
  if (o.a1 >= 1 && o.m1() > o.m2()) o = {e.a(1), e.b(1), e.a(0), e.b(0), {1, 0}};
  return o;
}

inline ComplexPoint from_oriented(const Oriented& o, Complex z1, Complex z2) {
  ComplexPoint p(2);
  p[o.slot[0]] = z1;
  p[o.slot[1]] = z2;
  return p;
}

}  // namespace detail

inline bool is_regular_surface(const ExponentData& e) {
  detail::require_surface(e);
  for (std::size_t i = 0; i < 2; ++i)
    if (e.a(i) == 1 && e.b(i) == 0) return true;
  return false;
}

inline SurfaceType surface_type(const ExponentData& e) {
  const auto o = detail::orient(e);
  SurfaceType t;
  t.swapped = o.slot[0] != 0;
  t.regular = is_regular_surface(e);
  if (o.a1 >= 1) {
    t.kind = o.m1() < o.m2() ? SurfaceCase::T1 : SurfaceCase::T2;
  } else {
    const int lhs = 2 * o.b1;
    t.kind = lhs < o.m2() ? SurfaceCase::T3 : lhs > o.m2() ? SurfaceCase::T4 : SurfaceCase::T5;
  }
  return t;
}

enum class ConeKind { PlaneZ1Zero, PlaneZ2Zero, WholeSurface, RayUnion };

inline std::string_view to_string(ConeKind k) {
  switch (k) {
    case ConeKind::PlaneZ1Zero: return "PlaneZ1Zero";
    case ConeKind::PlaneZ2Zero: return "PlaneZ2Zero";
    case ConeKind::WholeSurface: return "WholeSurface";
    case ConeKind::RayUnion: return "RayUnion";
  }
  return "?";
}

/// Planes are named in canonical coordinates. For RayUnion, angles are in the
/// z_2-line inside {z_1 = 0}, stored as multiples of pi.
struct ConeDescription {
  ConeKind kind = ConeKind::WholeSurface;
  std::vector<Rational> rays;          // constrained: a_2 theta = pi mod 2 pi
  std::vector<Rational> stated_lines;  // Im z_2^{a_2} = 0: a_2 lines, theta in [0, pi)
  int dimension = 2;

  [[nodiscard]] std::vector<double> ray_angles() const {
    std::vector<double> out;
    for (const auto& r : rays) out.push_back(to_double(r) * std::numbers::pi);
    return out;
  }
};

/// theta_j = (1 + 2j) pi / a_2 for j < a_2, as multiples of pi.
inline std::vector<Rational> admissible_ray_turns(int a2) {
  std::vector<Rational> out;
  for (int j = 0; j < a2; ++j) out.push_back(make_rational(1 + 2 * j, a2));
  return out;
}

inline ConeDescription tangent_cone(const ExponentData& e) {
  const auto t = surface_type(e);
  const auto o = detail::orient(e);
  ConeDescription c;
  switch (t.kind) {
    case SurfaceCase::T1: c.kind = t.swapped ? ConeKind::PlaneZ2Zero : ConeKind::PlaneZ1Zero; break;
    case SurfaceCase::T2:
    case SurfaceCase::T5: c.kind = ConeKind::WholeSurface; break;
    case SurfaceCase::T4: c.kind = ConeKind::PlaneZ2Zero; break;
    case SurfaceCase::T3:
      c.kind = ConeKind::RayUnion;
      c.dimension = 1;
      c.rays = admissible_ray_turns(o.a2);
      for (int j = 0; j < o.a2; ++j) c.stated_lines.push_back(make_rational(j, o.a2));
      break;
  }
  return c;
}

/// beta = (a_2 + 2 b_2) / (2 b_1), defined when a_1 = 0 (T3, T4, T5).
inline Rational horn_index(const ExponentData& e) {
  const auto o = detail::orient(e);
  if (o.a1 != 0) throw std::invalid_argument("horn index needs a_1 = 0 (types T3/T4)");
  return make_rational(o.m2(), 2 * o.b1);
}

struct InnerClass {
  Rational beta{1};
  int components = 1;
  bool components_derived = true;  // count comes from a phase/branch count, not a stated result
};

/// Components of the link: gcd(a_1, a_2) branches when a_1 >= 1, otherwise
/// one per admissible z_2 ray.
inline InnerClass inner_class(const ExponentData& e) {
  const auto t = surface_type(e);
  const auto o = detail::orient(e);
  InnerClass c;
  c.beta = t.kind == SurfaceCase::T3 ? horn_index(e) : Rational(1);
  c.components = o.a1 >= 1 ? std::gcd(o.a1, o.a2) : o.a2;
  return c;
}

/// False exactly for T1 and T3. Smooth germs are normally embedded.
inline bool normally_embedded(const ExponentData& e) {
  const auto t = surface_type(e);
  if (t.regular) return true;
  return !(t.kind == SurfaceCase::T1 || t.kind == SurfaceCase::T3);
}

struct SurfaceProfile {
  SurfaceType type;
  ConeDescription cone;
  Rational beta{1};
  int components = 1;
  bool components_derived = true;
  bool normally_embedded = true;
};

inline SurfaceProfile surface_profile(const ExponentData& e) {
  SurfaceProfile p;
  p.type = surface_type(e);
  p.cone = tangent_cone(e);
  const auto ic = inner_class(e);
  p.beta = ic.beta;
  p.components = ic.components;
  p.components_derived = ic.components_derived;
  p.normally_embedded = normally_embedded(e);
  return p;
}

/// gamma(t) = sum_k c_k t^{q_k}, coefficients in R^4 = (x_1, y_1, x_2, y_2), canonical order.
struct ArcTerm {
  std::array<double, 4> coeff{};
  Rational exponent;
};

class ArcSpec {
 public:
  ArcSpec() = default;
  explicit ArcSpec(std::vector<ArcTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("arc needs at least one term");
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (terms_[k].exponent <= 0) throw std::invalid_argument("arc exponents must be positive");
      if (k > 0 && !(terms_[k - 1].exponent < terms_[k].exponent))
        throw std::invalid_argument("arc exponents must be strictly increasing");
    }
    const auto& c = terms_.front().coeff;
    if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0)
      throw std::invalid_argument("leading arc coefficient must be non-zero");
  }

  [[nodiscard]] const std::vector<ArcTerm>& terms() const { return terms_; }

  [[nodiscard]] ComplexPoint evaluate(double t) const {
    ComplexPoint p(2, Complex(0.0, 0.0));
    for (const auto& term : terms_) {
      const double s = std::pow(t, to_double(term.exponent));
      p[0] += Complex(term.coeff[0], term.coeff[1]) * s;
      p[1] += Complex(term.coeff[2], term.coeff[3]) * s;
    }
    return p;
  }

 private:
  std::vector<ArcTerm> terms_;
};

namespace detail {

inline std::array<double, 4> coeff_in_slot(std::size_t slot, Complex c) {
  std::array<double, 4> out{};
  out[2 * slot] = c.real();
  out[2 * slot + 1] = c.imag();
  return out;
}

// Arc z_lead = u t, z_other = v t^q in oriented coordinates, terms merged when q = 1.
inline ArcSpec two_term_arc(const Oriented& o, bool lead_is_second, Complex u, Complex v, const Rational& q) {
  const std::size_t lead = lead_is_second ? o.slot[1] : o.slot[0];
  const std::size_t other = lead_is_second ? o.slot[0] : o.slot[1];
  if (q == 1) {
    auto c = coeff_in_slot(lead, u);
    const auto d = coeff_in_slot(other, v);
    for (std::size_t i = 0; i < 4; ++i) c[i] += d[i];
    return ArcSpec({{c, Rational(1)}});
  }
  if (q < 1) return ArcSpec({{coeff_in_slot(other, v), q}, {coeff_in_slot(lead, u), Rational(1)}});
  return ArcSpec({{coeff_in_slot(lead, u), Rational(1)}, {coeff_in_slot(other, v), q}});
}

inline Complex unit(double angle) { return std::polar(1.0, angle); }

}  // namespace detail

/// Two arcs on X through 0. With several sheets (branches of z_1 over z_2,
/// or admissible z_2 rays) they lie on distinct sheets; otherwise they are
/// two arcs of the single sheet.
inline std::pair<ArcSpec, ArcSpec> witness_arcs(const ExponentData& e) {
  const auto o = detail::orient(e);
  constexpr double pi = std::numbers::pi;
  if (o.a1 >= 1) {
    // z_2 = t e^{i theta}, z_1 = t^alpha e^{i (pi + a_2 theta + 2 pi k) / a_1}
    const Rational alpha = make_rational(o.m2(), o.m1());
    auto arc = [&](double theta, int k) {
      const Complex z1 = detail::unit((pi + o.a2 * theta + 2 * pi * k) / o.a1);
      return detail::two_term_arc(o, true, detail::unit(theta), z1, alpha);
    };
    if (o.a1 >= 2) return {arc(0.0, 0), arc(0.0, 1)};
    return {arc(0.0, 0), arc(pi, 0)};
  }
  // a_1 = 0: z_2 on ray theta_j with |z_2| = s, |z_1| = s^beta.
  const Rational beta = make_rational(o.m2(), 2 * o.b1);
  const double theta0 = pi / o.a2;
  const double theta1 = 3 * pi / o.a2;
  if (beta >= 1) {
    if (o.a2 >= 2)
      return {detail::two_term_arc(o, true, detail::unit(theta0), 1.0, beta),
              detail::two_term_arc(o, true, detail::unit(theta1), 1.0, beta)};
    return {detail::two_term_arc(o, true, detail::unit(theta0), 1.0, beta),
            detail::two_term_arc(o, true, detail::unit(theta0), -1.0, beta)};
  }
  // beta < 1: parameterize by |z_1| = t, |z_2| = t^{1/beta}.
  const Rational inv = 1 / beta;
  if (o.a2 >= 2)
    return {detail::two_term_arc(o, false, 1.0, detail::unit(theta0), inv),
            detail::two_term_arc(o, false, 1.0, detail::unit(theta1), inv)};
  return {detail::two_term_arc(o, false, 1.0, detail::unit(theta0), inv),
          detail::two_term_arc(o, false, -1.0, detail::unit(theta0), inv)};
}

/// Angle test for a_2 theta = pi (mod 2 pi).
inline bool is_admissible_ray(int a2, double theta, double tol = 1e-9) {
  const double x = (a2 * theta - std::numbers::pi) / (2 * std::numbers::pi);
  return std::abs(x - std::round(x)) <= tol;
}

/// Closed-form point of X. For a_1 >= 1 (oriented): z_2 = rho e^{i theta},
/// z_1 = rho^{m_2/m_1} e^{i (pi + a_2 theta + 2 pi k)/a_1}, 0 <= k < a_1.
/// For a_1 = 0: theta must be an admissible ray, k = 0, and z_1 has modulus
/// rho^{m_2/(2 b_1)} and the given phase.
inline ComplexPoint parameterize_surface(const ExponentData& e, double rho, double theta, int k, double phase = 0.0) {
  const auto o = detail::orient(e);
  if (!(rho >= 0.0)) throw std::invalid_argument("rho must be nonnegative");
  const Complex z2 = std::polar(rho, theta);
  if (o.a1 >= 1) {
    if (k < 0 || k >= o.a1)
      throw std::invalid_argument("branch index k must lie in [0, " + std::to_string(o.a1) + ")");
    const double mod = std::pow(rho, static_cast<double>(o.m2()) / o.m1());
    const double arg = (std::numbers::pi + o.a2 * theta + 2 * std::numbers::pi * k) / o.a1;
    return detail::from_oriented(o, std::polar(mod, arg), z2);
  }
  if (k != 0) throw std::invalid_argument("branch index must be 0 when a_1 = 0");
  if (!is_admissible_ray(o.a2, theta))
    throw std::invalid_argument("theta is not an admissible ray (a_2 theta = pi mod 2 pi)");
  const double mod = std::pow(rho, static_cast<double>(o.m2()) / (2.0 * o.b1));
  return detail::from_oriented(o, std::polar(mod, phase), z2);
}

/// Number of sheets of the chart: branches k when a_1 >= 1, admissible rays otherwise.
inline int chart_sheet_count(const ExponentData& e) {
  const auto o = detail::orient(e);
  return o.a1 >= 1 ? o.a1 : o.a2;
}

/// Exponent q with |z_1| = |z_2|^q on X (oriented coordinates).
inline double chart_exponent(const ExponentData& e) {
  const auto o = detail::orient(e);
  return o.a1 >= 1 ? static_cast<double>(o.m2()) / o.m1() : static_cast<double>(o.m2()) / (2.0 * o.b1);
}

/// rho with ||(z_1, z_2)|| = radius on the chart (rho^2 + rho^{2q} = radius^2).
inline double rho_for_radius(const ExponentData& e, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  const double q = chart_exponent(e);
  // Work in log scale to keep tiny radii accurate.
  const double lr = std::log(radius);
  auto g = [&](double lrho) {
    const double a = 2 * lrho;
    const double b = 2 * q * lrho;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi)) - 2 * lr;
  };
  double lo = lr - 60.0 - std::abs(lr) * std::max(1.0, 1.0 / q);
  double hi = lr + 1.0;
  boost::math::tools::eps_tolerance<double> tol(50);
  std::uintmax_t iters = 200;
  const auto bracket = boost::math::tools::toms748_solve(g, lo, hi, tol, iters);
  return std::exp(0.5 * (bracket.first + bracket.second));
}

namespace detail {

inline void require_classifiable(const ExponentData& e) {
  if (surface_type(e).regular)
    throw std::invalid_argument("surface " + e.describe() + " is smooth at the origin (regular)");
}

inline bool su3_pattern(const ExponentData& e) {
  require_surface(e);
  if (e.a(0) < 1 || e.b_is_zero()) return false;
  const bool item1 = e.a(0) == e.a(1) && e.m(0) < e.m(1);
  const bool item2 = e.a(0) < e.a(1) && e.m(0) == e.m(1);
  return item1 || item2;
}

inline bool is_ne_class(const SurfaceType& t) { return t.kind == SurfaceCase::T1 || t.kind == SurfaceCase::T3; }

}  // namespace detail

/// Purely mixed surface that is never outer equivalent to its normal form X_a.
inline bool has_su3_pattern(const ExponentData& e) { return detail::su3_pattern(e); }

inline EquivalenceVerdict outer_obstruction(const ExponentData& x, const ExponentData& y) {
  detail::require_surface(x);
  detail::require_surface(y);
  detail::require_classifiable(x);
  detail::require_classifiable(y);
  if (x == y) return EquivalenceVerdict::equivalent("identity", "identical germs up to relabeling");
  const bool su3 = (detail::su3_pattern(x) && y.b_is_zero() && x.a() == y.a()) ||
                   (detail::su3_pattern(y) && x.b_is_zero() && x.a() == y.a());
  if (su3) return EquivalenceVerdict::not_equivalent("su3", "purely mixed surface vs its holomorphic normal form");
  const auto tx = surface_type(x);
  const auto ty = surface_type(y);
  if (detail::is_ne_class(tx) != detail::is_ne_class(ty))
    return EquivalenceVerdict::not_equivalent("p2", tx.tag() + " vs " + ty.tag() + ": normal embedding differs");
  const auto cx = tangent_cone(x);
  const auto cy = tangent_cone(y);
  if (cx.dimension != cy.dimension)
    return EquivalenceVerdict::not_equivalent("tsam", "tangent cone dimensions " + std::to_string(cx.dimension) +
                                                          " vs " + std::to_string(cy.dimension));
  if (cx.kind == ConeKind::RayUnion && cy.kind == ConeKind::RayUnion && cx.rays.size() != cy.rays.size())
    return EquivalenceVerdict::not_equivalent("tsam", "tangent cone ray counts " + std::to_string(cx.rays.size()) +
                                                          " vs " + std::to_string(cy.rays.size()));
  return EquivalenceVerdict::undetermined("tsam", "no outer invariant separates " + tx.tag() + " and " + ty.tag());
}

inline EquivalenceVerdict ambient_obstruction(const ExponentData& x, const ExponentData& y) {
  for (const auto* e : {&x, &y}) {
    const auto t = surface_type(*e);
    if (t.regular || !(t.kind == SurfaceCase::T1 || t.kind == SurfaceCase::T2))
      throw std::invalid_argument("ambient comparison needs non-regular types T1 or T2, got " + t.tag() + " for " +
                                  e->describe());
  }
  if (x.a() != y.a()) return EquivalenceVerdict::not_equivalent("etsu", "a differs from c");
  const auto outer = outer_obstruction(x, y);
  if (outer.status == Equivalence::NotEquivalent) return outer;
  if (x == y) return EquivalenceVerdict::equivalent("identity", "identical germs up to relabeling");
  return EquivalenceVerdict::undetermined("su5", "a = c and no outer obstruction");
}

/// Is X ambient equivalent to some complex analytic plane curve germ?
inline EquivalenceVerdict ambient_to_complex_curve(const ExponentData& e) {
  detail::require_surface(e);
  if (detail::su3_pattern(e)) return EquivalenceVerdict::not_equivalent("su3", "never ambient equivalent to a complex plane curve");
  if (e.b_is_zero()) return EquivalenceVerdict::equivalent("holomorphic", "b = 0: X is a complex plane curve");
  return EquivalenceVerdict::undetermined("su3", "pattern absent");
}

struct HornMembership {
  bool member = false;
  std::optional<ExponentData> realization;  // h_{b,d} = |z_1|^{2b} + z_2^{1+d} conj(z_2)^d
};

/// H_beta = {x^2 + y^2 = z^{2 beta}, z >= 0}; relative tolerance on the defining equation.
inline HornMembership beta_horn_membership(const Rational& beta, const std::array<double, 3>& p, double tol = 1e-9) {
  if (beta <= 0) throw std::invalid_argument("beta must be positive");
  HornMembership out;
  const double lhs = p[0] * p[0] + p[1] * p[1];
  if (p[2] >= 0.0) {
    const double rhs = std::pow(p[2], 2.0 * to_double(beta));
    out.member = std::abs(lhs - rhs) <= tol * std::max({1.0, lhs, rhs});
  }
  const Integer num = numerator_of(beta);
  const Integer den = denominator_of(beta);
  if (den % 2 == 0) {
    const int b = static_cast<int>(den / 2);
    const int d = static_cast<int>((num - 1) / 2);
    out.realization = ExponentData({0, 1}, {b, d});
  }
  return out;
}

}  // namespace brieskorn
