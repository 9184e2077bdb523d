#pragma once

// Weighted-homogeneous types, filtration, and the sufficient conditions for
// bi-Lipschitz triviality of deformations.

#include "brieskorn/exponent_data.hpp"
#include "brieskorn/mixed_polynomial.hpp"
#include "brieskorn/rational.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn {

/// Type (r_1, ..., r_n; d, d): f(lambda^{r_i} z_i) = lambda^d f(z) for real lambda > 0.
struct WeightedHomType {
  std::vector<Rational> r;
  Rational d;

  [[nodiscard]] std::size_t n() const { return r.size(); }
  [[nodiscard]] Rational r_max() const { return *std::max_element(r.begin(), r.end()); }
  [[nodiscard]] Rational r_min() const { return *std::min_element(r.begin(), r.end()); }
};

/// d = lcm(a_i + 2 b_i), r_i = d / (a_i + 2 b_i), canonical order. Requires every a_i >= 1.
inline WeightedHomType weighted_type(const ExponentData& e) {
  for (int ai : e.a())
    if (ai == 0) throw std::invalid_argument("weighted type needs an isolated singularity (every a_i >= 1)");
  Integer d = 1;
  for (int mi : e.multiplicities()) d = lcm(d, Integer(mi));
  WeightedHomType w;
  w.d = Rational(d);
  for (int mi : e.multiplicities()) w.r.emplace_back(d, Integer(mi));
  return w;
}

/// sum_i r_i (nu_i + mu_i); conj(z_i) carries the weight of z_i.
inline Rational filtration(const MixedMonomial& m, const WeightedHomType& w) {
  if (m.n() != w.n())
    throw std::invalid_argument("dimension mismatch: monomial has " + std::to_string(m.n()) +
                                " variables, weights have " + std::to_string(w.n()));
  Rational fl = 0;
  for (std::size_t i = 0; i < m.n(); ++i) fl += w.r[i] * (m.nu[i] + m.mu[i]);
  return fl;
}

/// One monomial of Theta, assigned to the real (1) or imaginary (2) component.
struct DeformationTerm {
  MixedMonomial monomial;
  int target_component = 1;

  DeformationTerm(MixedMonomial m, int component) : monomial(std::move(m)), target_component(component) {
    if (monomial.is_constant()) throw std::invalid_argument("deformation term must be non-constant");
    if (component != 1 && component != 2) throw std::invalid_argument("target component must be 1 or 2");
  }
};

enum class Triviality { TrivialAlongInterval, TrivialSmallT, Unknown };

inline std::string_view to_string(Triviality t) {
  switch (t) {
    case Triviality::TrivialAlongInterval: return "TrivialAlongInterval";
    case Triviality::TrivialSmallT: return "TrivialSmallT";
    case Triviality::Unknown: return "Unknown";
  }
  return "?";
}

/// Larger is stronger.
inline int strength(Triviality t) {
  switch (t) {
    case Triviality::TrivialAlongInterval: return 2;
    case Triviality::TrivialSmallT: return 1;
    case Triviality::Unknown: return 0;
  }
  return 0;
}

struct ThresholdOptions {
  bool lenient_threshold = false;  // d - r_max + r_min instead of d + r_max - r_min
};

inline Rational triviality_threshold(const WeightedHomType& w, ThresholdOptions opt = {}) {
  return opt.lenient_threshold ? w.d - w.r_max() + w.r_min() : w.d + w.r_max() - w.r_min();
}

struct TrivialityVerdict {
  Triviality status = Triviality::Unknown;
  Rational threshold_used;
  Rational filtration_found;                          // min over all components present
  std::array<std::optional<Rational>, 2> component_filtration;  // nullopt: Theta_i = 0

  /// The full-interval question; only a strict inequality answers it.
  [[nodiscard]] Triviality along_interval() const {
    return status == Triviality::TrivialAlongInterval ? status : Triviality::Unknown;
  }
};

inline TrivialityVerdict check_deformation_triviality(const WeightedHomType& w,
                                                      const std::vector<DeformationTerm>& terms,
                                                      ThresholdOptions opt = {}) {
  if (terms.empty()) throw std::invalid_argument("deformation has no terms");
  TrivialityVerdict v;
  v.threshold_used = triviality_threshold(w, opt);
  for (const auto& t : terms) {
    const Rational fl = filtration(t.monomial, w);
    auto& slot = v.component_filtration[static_cast<std::size_t>(t.target_component - 1)];
    if (!slot || fl < *slot) slot = fl;
  }
  bool strict = true;
  bool weak = true;
  std::optional<Rational> lowest;
  for (const auto& slot : v.component_filtration) {
    if (!slot) continue;
    if (!lowest || *slot < *lowest) lowest = slot;
    strict = strict && *slot > v.threshold_used;
    weak = weak && *slot >= v.threshold_used;
  }
  v.filtration_found = *lowest;
  v.status = strict ? Triviality::TrivialAlongInterval : weak ? Triviality::TrivialSmallT : Triviality::Unknown;
  return v;
}

inline TrivialityVerdict check_deformation_triviality(const ExponentData& e,
                                                      const std::vector<DeformationTerm>& terms,
                                                      ThresholdOptions opt = {}) {
  return check_deformation_triviality(weighted_type(e), terms, opt);
}

/// Hypotheses of the suspension theorem for f(w, z) = p(w) + sum z_i^{a_i} q_i.
struct SuspensionCheck {
  bool success = false;
  int failed_hypothesis = 0;  // 0 when all hold
  std::string message;
  int jet_order = 0;
  int jet_order_required = 0;  // max(d, 2 max l_i)
  Rational threshold_used;
  std::optional<Rational> filtration_found;  // nullopt when q~ = 0
  bool topological_submersion = false;
  std::optional<MixedPolynomial> normal_form;       // h, variables (w_1..w_m, z_1..z_n)
  std::optional<MixedPolynomial> topological_form;  // g
};

namespace detail {

inline MixedPolynomial suspension(const std::vector<int>& l, const ExponentData& e, bool holomorphic) {
  const std::size_t m = l.size();
  const std::size_t total = m + e.n();
  MixedPolynomial out(total);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> nu(total, 0);
    nu[i] = l[i];
    out.add(MixedMonomial(GaussianRational(1), nu, nu));
  }
  for (std::size_t i = 0; i < e.n(); ++i) {
    std::vector<int> nu(total, 0), mu(total, 0);
    const int ai = e.user_a()[i];
    const int bi = holomorphic ? 0 : e.user_b()[i];
    nu[m + i] = ai + bi;
    mu[m + i] = bi;
    out.add(MixedMonomial(GaussianRational(1), nu, mu));
  }
  return out;
}

}  // namespace detail

/// q_tilde monomials are in the z variables, user order.
inline SuspensionCheck check_deffam_hypotheses(const std::vector<int>& l_exponents, int l,
                                               const ExponentData& e,
                                               const std::vector<DeformationTerm>& q_tilde,
                                               ThresholdOptions opt = {}) {
  if (l_exponents.empty()) throw std::invalid_argument("need at least one w variable");
  for (int li : l_exponents)
    if (li < 1) throw std::invalid_argument("jet exponents l_i must be >= 1");

  SuspensionCheck out;
  out.jet_order = l;
  out.topological_submersion = e.has_unit_exponent();

  if (e.zero_count() > 0) {
    out.failed_hypothesis = 3;
    out.message = "hypothesis 3: weighted type needs every a_i >= 1";
    return out;
  }
  // Weights are needed in user order to match q~ variables.
  const WeightedHomType canon = weighted_type(e);
  WeightedHomType w{std::vector<Rational>(e.n()), canon.d};
  for (std::size_t i = 0; i < e.n(); ++i) w.r[e.perm()[i]] = canon.r[i];

  const int d = static_cast<int>(numerator_of(w.d));
  const int lmax = *std::max_element(l_exponents.begin(), l_exponents.end());
  out.jet_order_required = std::max(d, 2 * lmax);
  const int m = static_cast<int>(l_exponents.size());
  if (l <= m) {
    out.failed_hypothesis = 1;
    out.message = "hypothesis 1: need l > m, got l=" + std::to_string(l) + ", m=" + std::to_string(m);
    return out;
  }
  if (l < out.jet_order_required) {
    out.failed_hypothesis = 1;
    out.message = "hypothesis 1: l=" + std::to_string(l) + " below required jet order " +
                  std::to_string(out.jet_order_required);
    return out;
  }

  out.threshold_used = triviality_threshold(w, opt);
  for (const auto& t : q_tilde) {
    const Rational fl = filtration(t.monomial, w);
    if (!out.filtration_found || fl < *out.filtration_found) out.filtration_found = fl;
  }
  if (out.filtration_found && *out.filtration_found < out.threshold_used) {
    out.failed_hypothesis = 4;
    out.message = "hypothesis 4: fl(q~) = " + to_string(*out.filtration_found) + " < " + to_string(out.threshold_used);
    return out;
  }

  out.success = true;
  out.message = "all hypotheses hold";
  out.normal_form = detail::suspension(l_exponents, e, false);
  out.topological_form = detail::suspension(l_exponents, e, true);
  return out;
}

}  // namespace brieskorn
