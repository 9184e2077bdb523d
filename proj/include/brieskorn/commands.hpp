#pragma once

// Report builders behind the command-line verbs. Exponent vectors are echoed
// in user order; canonical data is reported next to the permutation.

#include "brieskorn/brieskorn.hpp"

#include <boost/algorithm/string/trim.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace brieskorn::commands {

/// Bad command-line input; the tool exits with code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    boost::algorithm::trim(item);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw InputError("not an integer: '" + item + "'");
    if (v < 0) throw InputError("exponents must be nonnegative: " + item);
    out.push_back(v);
  }
  if (out.empty() || boost::algorithm::trim_copy(text).back() == ',') throw InputError("empty exponent list '" + text + "'");
  return out;
}

inline ExponentData make_exponents(const std::vector<int>& a, const std::vector<int>& b) {
  try {
    return ExponentData(a, b);
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
}

/// BRIESKORN_SEED, when set, wins over the flag.
inline std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("BRIESKORN_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("BRIESKORN_SEED is not an unsigned integer: ") + env);
  }
  return flag;
}

inline Json exponents_json(const ExponentData& e) {
  std::vector<std::size_t> perm1;
  for (auto p : e.perm()) perm1.push_back(p + 1);
  return Json{{"a", e.user_a()},
              {"b", e.user_b()},
              {"canonical", {{"a", e.a()}, {"b", e.b()}, {"user_index", perm1}}}};
}

inline Json verdict_json(const EquivalenceVerdict& v) {
  return Json{{"status", std::string(to_string(v.status))},
              {"tag", v.reason},
              {"witness", v.witness ? Json(*v.witness) : Json(nullptr)}};
}

/// Plane names are canonical inside the library; reports use the user's
/// coordinate labels.
inline std::string user_cone_name(const ExponentData& e, ConeKind k) {
  const bool swapped = e.n() == 2 && e.perm()[0] == 1;
  if (swapped && k == ConeKind::PlaneZ1Zero) return std::string(to_string(ConeKind::PlaneZ2Zero));
  if (swapped && k == ConeKind::PlaneZ2Zero) return std::string(to_string(ConeKind::PlaneZ1Zero));
  return std::string(to_string(k));
}

inline Json cone_json(const ExponentData& e, const ConeDescription& c) {
  Json rays = Json::array();
  for (const auto& r : c.rays) rays.push_back(to_string(r) + " pi");
  Json lines = Json::array();
  for (const auto& r : c.stated_lines) lines.push_back(to_string(r) + " pi");
  Json j{{"kind", user_cone_name(e, c.kind)}, {"dimension", c.dimension}, {"rays", rays}, {"stated_lines", lines}};
  if (c.kind == ConeKind::PlaneZ1Zero || c.kind == ConeKind::PlaneZ2Zero)
    j["plane"] = user_cone_name(e, c.kind) == "PlaneZ1Zero" ? "{z1=0}" : "{z2=0}";
  if (c.kind == ConeKind::RayUnion) j["ray_line"] = "z" + std::to_string(e.perm()[1] + 1);
  return j;
}

inline Json weighted_type_json(const ExponentData& e) {
  const auto w = weighted_type(e);
  std::vector<std::string> r_user(e.n());
  for (std::size_t i = 0; i < e.n(); ++i) r_user[e.perm()[i]] = to_string(w.r[i]);
  std::string notation = "(";
  for (std::size_t i = 0; i < r_user.size(); ++i) notation += (i ? "," : "") + r_user[i];
  notation += ";" + to_string(w.d) + "," + to_string(w.d) + ")";
  return Json{{"r", r_user}, {"d", to_string(w.d)}, {"notation", notation}};
}

inline Report cmd_classify(const ExponentData& e, ThresholdOptions threshold = {}) {
  Report r;
  r.command = "classify";
  r.inputs = exponents_json(e);
  const auto nf = topological_normal_form(e);
  r.add("topological normal form", "topfor", to_string(nf.polynomial()));
  r.add("topological submersion", "submfam", is_topological_submersion(e));
  r.add("multiplicity min(a_i + 2 b_i)", "multiplicity", family_multiplicity(e));
  if (std::find(e.user_a().begin(), e.user_a().end(), 0) == e.user_a().end()) {
    r.add("weighted homogeneous type", "l1", weighted_type_json(e));
    r.details["triviality_threshold"] = Json{{"value", to_string(triviality_threshold(weighted_type(e), threshold))},
                                             {"reading", threshold.lenient_threshold ? "lenient" : "strict"}};
  } else {
    r.details["weighted_type"] = "undefined: some a_i = 0";
  }
  r.details["polynomial"] = to_string(build_family(e));
  r.details["isolated_singularity"] = has_isolated_singularity(e);
  if (e.n() == 2) {
    const auto p = surface_profile(e);
    Json prof{{"type", p.type.tag()},
              {"regular", p.type.regular},
              {"cone", cone_json(e, p.cone)},
              {"beta", to_string(p.beta)},
              {"components", p.components},
              {"normally_embedded", p.normally_embedded}};
    r.add("surface type", "tgcsup", p.type.tag());
    r.add("tangent cone", "tgcsup", prof["cone"]);
    r.add("inner class beta", p.type.kind == SurfaceCase::T3 ? "l17" : "p1", to_string(p.beta));
    r.add("normally embedded", "l17", p.normally_embedded);
    r.details["surface"] = prof;
  }
  return r;
}

enum class CompareMode { Top, Bilip, Outer, Ambient };

inline CompareMode parse_mode(const std::string& s) {
  if (s == "top") return CompareMode::Top;
  if (s == "bilip") return CompareMode::Bilip;
  if (s == "outer") return CompareMode::Outer;
  if (s == "ambient") return CompareMode::Ambient;
  throw InputError("unknown mode '" + s + "' (top|bilip|outer|ambient)");
}

inline Report cmd_compare(const ExponentData& x, const ExponentData& y, const std::string& mode) {
  if (x.n() != y.n()) throw InputError("the two germs have different numbers of variables");
  Report r;
  r.command = "compare";
  r.inputs = Json{{"first", exponents_json(x)}, {"second", exponents_json(y)}, {"mode", mode}};
  EquivalenceVerdict v;
  std::string claim;
  try {
    switch (parse_mode(mode)) {
      case CompareMode::Top:
        claim = "topologically right equivalent";
        v = topologically_equivalent(x, y);
        break;
      case CompareMode::Bilip:
        claim = "bi-Lipschitz right equivalent";
        v = bilipschitz_equivalent(x, y);
        break;
      case CompareMode::Outer:
        claim = "zero sets outer bi-Lipschitz equivalent";
        v = outer_obstruction(x, y);
        break;
      case CompareMode::Ambient:
        claim = "zero sets ambient bi-Lipschitz equivalent";
        v = ambient_obstruction(x, y);
        break;
    }
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  r.add(claim, v.reason, verdict_json(v));
  return r;
}

struct VerifyOptions {
  std::vector<std::string> checks{"cone", "beta", "ne", "conj", "mult"};
  std::uint64_t seed = 1;
  std::size_t conj_samples = 10000;
  std::size_t beta_pairs = 64;
  std::size_t mult_rays = 64;
};

/// Growth exponent of inner/outer distance claimed by the normal-embedding
/// criterion: alpha - 1 for T1, beta - 1 for T3, 0 otherwise.
inline Rational claimed_ne_exponent(const ExponentData& e) {
  const auto t = surface_type(e);
  if (t.kind == SurfaceCase::T1) {
    const auto o = detail::orient(e);
    return make_rational(o.m2(), o.m1()) - 1;
  }
  if (t.kind == SurfaceCase::T3) return horn_index(e) - 1;
  return Rational(0);
}

inline void verify_cone(Report& r, const ExponentData& e, std::uint64_t seed) {
  numeric::ConeEstimateOptions opt;
  opt.seed = seed;
  const auto est = numeric::estimate_tangent_cone(e, opt);
  const double tol = 1e-2;
  Json num{{"kind", user_cone_name(e, est.kind)},
           {"hausdorff", est.hausdorff_to_symbolic},
           {"clusters", est.clusters},
           {"ray_count", est.ray_count},
           {"dimension", est.dimension},
           {"directions", est.directions.size()},
           {"stable", est.stable},
           {"max_initial_form", est.max_initial_form},
           {"criterion", est.criterion}};
  r.add("tangent cone kind", "tgcsup", user_cone_name(e, tangent_cone(e).kind), num, tol,
        est.matches && est.stable && est.hausdorff_to_symbolic <= tol);
  r.add("estimated directions lie in the algebraic tangent cone", "rem0", 0.0, est.max_initial_form, 1e-6,
        est.max_initial_form <= 1e-6);
}

inline void verify_beta(Report& r, const ExponentData& e, std::uint64_t seed, std::size_t pairs) {
  const auto t = surface_type(e);
  const Rational beta = t.kind == SurfaceCase::T3 ? horn_index(e) : Rational(1);
  const auto est = numeric::estimate_beta(e, pairs, seed);
  const double b = to_double(beta);
  const bool pass = !est.fit.unstable && std::abs(est.fit.slope - b) <= 0.05 * b && est.fit.rational_snap &&
                    *est.fit.rational_snap == beta;
  Json num = to_json(est.fit);
  num["pairs"] = est.pairs;
  num["unstable_pairs"] = est.unstable_pairs;
  r.add("inner exponent beta", t.kind == SurfaceCase::T3 ? "l17" : "p1", to_string(beta), num, 0.05 * b, pass);
}

inline void verify_ne(Report& r, const ExponentData& e, std::uint64_t seed) {
  const auto chk = numeric::check_normal_embedding(e, numeric::dyadic_grid(8, 40), seed);
  const bool claimed = normally_embedded(e);
  const double expected = to_double(claimed_ne_exponent(e));
  const double tol = expected == 0.0 ? 0.05 : 0.1 * std::abs(expected);
  const bool pass = chk.normally_embedded == claimed && std::abs(chk.exponent - expected) <= tol;
  Json num = to_json(chk.fit);
  num["exponent"] = chk.exponent;
  num["normally_embedded"] = chk.normally_embedded;
  num["through_origin"] = chk.through_origin;
  num["metric_axiom_ok"] = chk.metric_axiom_ok;
  r.add("normally embedded (growth exponent of inner/outer)", "l17",
        Json{{"normally_embedded", claimed}, {"exponent", to_string(claimed_ne_exponent(e))}}, num, tol, pass);
}

inline Report cmd_verify(const ExponentData& e, const VerifyOptions& opt) {
  Report r;
  r.command = "verify";
  r.seed = opt.seed;
  r.inputs = exponents_json(e);
  r.inputs["checks"] = opt.checks;
  for (const auto& c : opt.checks) {
    const bool geometric = c == "cone" || c == "beta" || c == "ne";
    if (c != "conj" && c != "mult" && !geometric) throw InputError("unknown check '" + c + "'");
    if (geometric && e.n() != 2) throw InputError("check '" + c + "' needs n = 2");
    if (c == "ne" && is_regular_surface(e)) throw InputError("check 'ne' needs a singular surface germ");
  }
  for (const auto& c : opt.checks) {
    if (c == "cone") verify_cone(r, e, opt.seed);
    if (c == "beta") verify_beta(r, e, opt.seed, opt.beta_pairs);
    if (c == "ne") verify_ne(r, e, opt.seed);
    if (c == "conj") {
      const double res = numeric::verify_conjugation(e, opt.conj_samples, opt.seed);
      r.add("g(phi(z)) = f(z), max relative residual", "topfor", 0.0, res, 1e-9, res <= 1e-9);
    }
    if (c == "mult") {
      const int m = family_multiplicity(e);
      const auto est = numeric::verify_multiplicity_numeric(e, opt.mult_rays, opt.seed);
      r.add("multiplicity from log|f(tv)| slopes", "multiplicity", m,
            Json{{"value", est.value}, {"min_slope", est.min_slope}, {"unstable", est.unstable}}, 0.0,
            !est.unstable && est.value == m);
      const int brute = multiplicity(build_family(e));
      r.add("multiplicity from the real expansion", "multiplicity", m, brute, 0.0, brute == m);
    }
  }
  return r;
}

struct Enumeration {
  Report report;
  std::string csv;
};

inline Enumeration cmd_enumerate(const std::vector<int>& a, int b_bound) {
  if (b_bound < 0) throw InputError("--b-bound must be >= 0");
  ClassEnumeration en;
  try {
    en = enumerate_lipschitz_classes(a, b_bound);
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  auto vec = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  Enumeration out;
  Report& r = out.report;
  r.command = "enumerate";
  r.inputs = Json{{"a", a}, {"b_bound", b_bound}};
  r.add("number of bi-Lipschitz classes", "corfam", static_cast<int>(en.count()));
  r.add("family is topologically trivial", "corfam", en.topologically_trivial);
  Json classes = Json::array();
  std::ostringstream csv;
  csv << "class,representative_b,members,multiplicities,topologically_trivial,undetermined_partner\n";
  for (std::size_t k = 0; k < en.classes.size(); ++k) {
    const auto& c = en.classes[k];
    std::vector<int> mult;
    for (std::size_t i = 0; i < a.size(); ++i) mult.push_back(a[i] + 2 * c.representative[i]);
    std::string members;
    for (std::size_t m = 0; m < c.members.size(); ++m) members += (m ? ";" : "") + vec(c.members[m]);
    csv << k + 1 << "," << vec(c.representative) << "," << members << "," << vec(mult) << ","
        << (en.topologically_trivial ? "true" : "false") << "," << (c.has_undetermined_partner ? "true" : "false")
        << "\n";
    classes.push_back(Json{{"representative_b", c.representative},
                           {"members", c.members},
                           {"undetermined_partner", c.has_undetermined_partner}});
  }
  r.details["classes"] = classes;
  out.csv = csv.str();
  return out;
}

struct Sample {
  Report report;
  numeric::PointCloud cloud;  // user coordinate order
};

inline Sample cmd_sample(const ExponentData& e, std::size_t count, double r_min, double r_max, std::uint64_t seed) {
  if (e.n() != 2) throw InputError("sample needs n = 2");
  if (!(r_min > 0.0) || !(r_max > r_min)) throw InputError("need 0 < r-min < r-max");
  Sample out;
  const auto cloud = numeric::sample_surface(e, count, r_min, r_max, seed);
  const int m1 = *std::min_element(e.multiplicities().begin(), e.multiplicities().end());
  double worst = 0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    worst = std::max(worst, std::abs(evaluate_family(e, cloud.points[i])) /
                                std::max(1.0, std::pow(cloud.radii[i], m1)));
    out.cloud.add(e.to_user(cloud.points[i]));
  }
  out.cloud.seed = seed;
  out.cloud.source = cloud.source;
  Report& r = out.report;
  r.command = "sample";
  r.seed = seed;
  r.inputs = exponents_json(e);
  r.inputs["count"] = count;
  r.inputs["r_min"] = r_min;
  r.inputs["r_max"] = r_max;
  r.add("sampled points lie on the zero set, max |f(p)| / max(1, |p|^m)", "topfor", 0.0, worst, 1e-8,
        worst <= 1e-8);
  r.details["source"] = cloud.source;
  return out;
}

}  // namespace brieskorn::commands
