#pragma once

// Decision procedures for topological and bi-Lipschitz (right) equivalence
// inside the mixed Pham-Brieskorn family, plus the topological normal form
// and its conjugating homeomorphism.

#include "brieskorn/exponent_data.hpp"
#include "brieskorn/mixed_polynomial.hpp"
#include "brieskorn/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace brieskorn {

/// sum_{i<=k} |z_i|^{2 b_i} + sum_{i>k} z_i^{a_i}, canonical order.
struct TopNormalForm {
  std::size_t k = 0;
  std::vector<int> zero_block_b;
  std::vector<int> positive_a;

  [[nodiscard]] std::size_t n() const { return k + positive_a.size(); }

  [[nodiscard]] MixedPolynomial polynomial() const {
    MixedPolynomial g(n());
    for (std::size_t i = 0; i < n(); ++i) {
      std::vector<int> nu(n(), 0), mu(n(), 0);
      if (i < k) {
        nu[i] = mu[i] = zero_block_b[i];
      } else {
        nu[i] = positive_a[i - k];
      }
      g.add(MixedMonomial(GaussianRational(1), nu, mu));
    }
    return g;
  }

  [[nodiscard]] Complex evaluate(std::span<const Complex> w) const {
    if (w.size() != n()) throw std::invalid_argument("dimension mismatch in normal form evaluation");
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < k; ++i) sum += detail::ipow(std::norm(w[i]), zero_block_b[i]);
    for (std::size_t i = k; i < n(); ++i) sum += detail::ipow(w[i], positive_a[i - k]);
    return sum;
  }

  friend bool operator==(const TopNormalForm&, const TopNormalForm&) = default;
};

inline TopNormalForm topological_normal_form(const ExponentData& e) {
  TopNormalForm nf;
  nf.k = e.zero_count();
  for (std::size_t i = 0; i < e.n(); ++i) {
    if (i < nf.k) {
      nf.zero_block_b.push_back(e.b(i));
    } else {
      nf.positive_a.push_back(e.a(i));
    }
  }
  return nf;
}

/// w_i = z_i |z_i|^{2 b_i / a_i} for a_i >= 1, identity where a_i = 0.
/// Satisfies normal_form(phi(z)) = f_{a,b}(z).
inline ComplexPoint apply_phi(const ExponentData& e, const ComplexPoint& z) {
  e.check_dim(z.size());
  ComplexPoint w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double r2 = std::norm(z[i]);
    if (e.a(i) == 0 || e.b(i) == 0 || r2 == 0.0) {
      w[i] = z[i];
    } else {
      w[i] = z[i] * std::pow(r2, static_cast<double>(e.b(i)) / e.a(i));
    }
  }
  return w;
}

/// z_i = w_i / |w_i|^{2 b_i / (a_i + 2 b_i)}; continuous at 0.
inline ComplexPoint apply_phi_inverse(const ExponentData& e, const ComplexPoint& w) {
  e.check_dim(w.size());
  ComplexPoint z(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double r = std::abs(w[i]);
    if (e.a(i) == 0 || e.b(i) == 0 || r == 0.0) {
      z[i] = w[i];
    } else {
      z[i] = w[i] / std::pow(r, 2.0 * e.b(i) / (e.a(i) + 2.0 * e.b(i)));
    }
  }
  return z;
}

inline bool is_topological_submersion(const ExponentData& e) { return e.has_unit_exponent(); }

namespace detail {

// Cycle notation (1-based) of the joint relabeling sending user index
// perm_x[i] of x to user index perm_y[i] of y.
inline std::string permutation_witness(const ExponentData& x, const ExponentData& y) {
  const std::size_t n = x.n();
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[x.perm()[i]] = y.perm()[i];
  std::vector<bool> seen(n, false);
  std::string out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || sigma[s] == s) continue;
    out += "(";
    for (std::size_t j = s; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      out += (out.back() == '(' ? "" : " ") + std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace detail

inline EquivalenceVerdict topologically_equivalent(const ExponentData& x, const ExponentData& y) {
  require_same_n(x, y);
  const bool sx = x.has_unit_exponent();
  const bool sy = y.has_unit_exponent();
  if (sx != sy) return EquivalenceVerdict::not_equivalent("submfam", "exactly one side has some a_i = 1");
  if (sx) return EquivalenceVerdict::equivalent("submfam", "both are topological submersions");
  // No unit exponents: every a_i is 0 or >= 2, so the normal forms decide.
  if (x.a() != y.a()) {
    const bool all_ge2 = x.zero_count() == 0 && y.zero_count() == 0;
    const std::string detail = "a=" + detail::vec_str(x.a()) + " vs c=" + detail::vec_str(y.a());
    if (all_ge2) return EquivalenceVerdict::not_equivalent("etsu", detail);
    if (x.zero_count() != y.zero_count())
      return EquivalenceVerdict::not_equivalent("cortop", "zero-block sizes differ; " + detail);
    return EquivalenceVerdict::not_equivalent("cortop", detail);
  }
  if (x.zero_count() > 0 && x.b() != y.b()) {
    // Zero blocks |z|^{2b} and |z|^{2d} are conjugate by radial powers.
    return EquivalenceVerdict::equivalent("cortop-radial", "a = c; zero blocks matched by t -> t^{d/b}");
  }
  return EquivalenceVerdict::equivalent("cortop", "a = c");
}

inline EquivalenceVerdict bilipschitz_equivalent(const ExponentData& x, const ExponentData& y) {
  require_same_n(x, y);
  const auto top = topologically_equivalent(x, y);
  if (top.status == Equivalence::NotEquivalent) return top;
  if (x == y) return EquivalenceVerdict::equivalent("class1", detail::permutation_witness(x, y));
  if (!x.has_unit_exponent())
    return EquivalenceVerdict::not_equivalent("class1", "no joint permutation matches (a,b) to (c,d)");
  const auto mx = detail::sorted(x.multiplicities());
  const auto my = detail::sorted(y.multiplicities());
  if (mx != my)
    return EquivalenceVerdict::not_equivalent(
        "class1", "multiplicity multisets " + detail::vec_str(mx) + " vs " + detail::vec_str(my));
  return EquivalenceVerdict::undetermined("class1", "a_1 = 1 with matching multiplicities " + detail::vec_str(mx));
}

/// Compare f_{a,b} with the holomorphic g_c = sum z_i^{c_i} (all c_i >= 1).
inline EquivalenceVerdict bilip_vs_holomorphic(const ExponentData& e, const std::vector<int>& c) {
  if (c.size() != e.n()) throw std::invalid_argument("dimension mismatch: c has wrong length");
  for (int ci : c)
    if (ci < 1) throw std::invalid_argument("holomorphic exponents must be >= 1");
  const ExponentData g(c, std::vector<int>(c.size(), 0));
  const auto top = topologically_equivalent(e, g);
  if (top.status == Equivalence::NotEquivalent) return top;
  if (!e.has_unit_exponent()) {
    if (e == g) return EquivalenceVerdict::equivalent("class1-cor", detail::permutation_witness(e, g));
    return EquivalenceVerdict::not_equivalent("class1-cor", "requires a = c and b = 0");
  }
  const auto me = detail::sorted(e.multiplicities());
  if (me != g.a()) return EquivalenceVerdict::not_equivalent("class1-cor", "requires a_i + 2b_i = c_i");
  if (e.b_is_zero()) return EquivalenceVerdict::equivalent("class1-cor", detail::permutation_witness(e, g));
  return EquivalenceVerdict::undetermined("class1-cor", "a_i + 2b_i = c_i holds with b != 0");
}

struct LipschitzClass {
  std::vector<int> representative;           // b in user order
  std::vector<std::vector<int>> members;     // all b in the class
  bool has_undetermined_partner = false;     // an Undetermined verdict touched this class
};

struct ClassEnumeration {
  std::vector<int> a;
  int b_bound = 0;
  std::vector<LipschitzClass> classes;
  bool topologically_trivial = true;  // every member topologically equivalent to the first
  [[nodiscard]] std::size_t count() const { return classes.size(); }
};

/// Partition {b : 0 <= b_i <= b_bound} under bilipschitz_equivalent.
/// Undetermined pairs stay in separate classes and are flagged.
inline ClassEnumeration enumerate_lipschitz_classes(const std::vector<int>& a, int b_bound) {
  if (b_bound < 0) throw std::invalid_argument("b_bound must be >= 0");
  (void)ExponentData(a, std::vector<int>(a.size(), 1));  // validates a
  std::vector<ExponentData> family;
  std::vector<std::vector<int>> bs;
  std::vector<int> b(a.size(), 0);
  while (true) {
    bool valid = true;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] == 0 && b[i] == 0) valid = false;
    if (valid) {
      family.emplace_back(a, b);
      bs.push_back(b);
    }
    std::size_t i = 0;
    while (i < b.size() && b[i] == b_bound) b[i++] = 0;
    if (i == b.size()) break;
    ++b[i];
  }

  std::vector<std::size_t> parent(family.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> undetermined(family.size(), false);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto v = bilipschitz_equivalent(family[i], family[j]);
      if (v.status == Equivalence::Equivalent) parent[find(i)] = find(j);
      if (v.status == Equivalence::Undetermined) undetermined[i] = undetermined[j] = true;
    }
  }

  ClassEnumeration out;
  out.a = a;
  out.b_bound = b_bound;
  std::vector<long> slot(family.size(), -1);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(out.classes.size());
      out.classes.push_back({bs[i], {}, false});
    }
    auto& cls = out.classes[static_cast<std::size_t>(slot[root])];
    cls.members.push_back(bs[i]);
    cls.has_undetermined_partner = cls.has_undetermined_partner || undetermined[i];
    if (topologically_equivalent(family.front(), family[i]).status != Equivalence::Equivalent)
      out.topologically_trivial = false;
  }
  return out;
}

}  // namespace brieskorn
