#pragma once

// Normal embedding test: growth of inner/outer distance between the two
// witness arcs as t -> 0.

#include "brieskorn/numeric/contact.hpp"
#include "brieskorn/numeric/geodesic.hpp"
#include "brieskorn/numeric/point_cloud.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace brieskorn::numeric {

/// Inner distances come from a chart-grid graph (see build_chart_grid):
/// random k-NN graphs cannot follow the thin circles of beta-horns once
/// r^beta is far below the sampling gap in r.
struct NormalEmbeddingOptions {
  int angles = 64;             // grid points per 2 pi of chart angle
  int steps_per_octave = 0;    // 0: angles * ln 2 / (2 pi), rounded, i.e. square cells
  int octaves_below = 4;       // grid extends this far below the smallest t
  int octaves_above = 1;
  double threshold = 0.05;     // not normally embedded iff e > threshold
};

struct NormalEmbeddingCheck {
  ExponentFit fit;  // of log(inner/outer) against log t; slope = -e
  double exponent = 0.0;
  bool normally_embedded = true;
  std::vector<double> t;
  std::vector<double> inner;
  std::vector<double> outer;
  bool through_origin = false;        // arcs lie in different components of X minus the origin
  bool metric_axiom_ok = true;        // inner >= outer at every t
  double grid_alignment_error = 0.0;  // max |grid node - arc point| / |arc point|
  std::size_t vertices = 0;
};

/// Dominant modulus of a surface point (the radial chart coordinate).
inline double chart_modulus(const ExponentData& e, const ComplexPoint& p) {
  const auto o = detail::orient(e);
  return std::abs(chart_z2_leads(e) ? p[o.slot[1]] : p[o.slot[0]]);
}

inline NormalEmbeddingCheck check_normal_embedding(const ExponentData& e, const std::vector<double>& t_grid,
                                                   std::uint64_t /*seed: the grid is deterministic*/,
                                                   const NormalEmbeddingOptions& opt = {}) {
  detail::require_classifiable(e);
  if (t_grid.size() < 2) throw std::invalid_argument("normal embedding check needs at least two t values");
  const auto [arc1, arc2] = witness_arcs(e);
  const int steps = opt.steps_per_octave > 0
                        ? opt.steps_per_octave
                        : std::max(2, static_cast<int>(std::lround(opt.angles * std::log(2.0) / kTwoPi)));

  auto radial_index = [&](double r) { return static_cast<int>(std::lround(-steps * std::log2(r))); };
  int i_lo = std::numeric_limits<int>::max(), i_hi = std::numeric_limits<int>::min();
  for (double t : t_grid)
    for (const auto* arc : {&arc1, &arc2}) {
      const int i = radial_index(chart_modulus(e, arc->evaluate(t)));
      i_lo = std::min(i_lo, i);
      i_hi = std::max(i_hi, i);
    }
  const ChartGrid grid =
      build_chart_grid(e, steps, i_lo - steps * opt.octaves_above, i_hi + steps * opt.octaves_below, opt.angles);
  const GeodesicGraph graph(grid.cloud, grid.edges, true);

  auto node_of = [&](const ComplexPoint& p) {
    const auto c = chart_coordinates(e, p);
    const int j = positive_mod(std::lround(c.angle / (kTwoPi / opt.angles)), opt.angles);
    return grid.index(radial_index(chart_modulus(e, p)), j, c.sheet);
  };

  const auto diff = arc_difference(arc1, arc2);
  NormalEmbeddingCheck out;
  out.vertices = graph.vertex_count();
  std::vector<double> ratio;
  for (double t : t_grid) {
    const auto p1 = arc1.evaluate(t);
    const auto p2 = arc2.evaluate(t);
    const std::size_t i = node_of(p1);
    const std::size_t j = node_of(p2);
    const double outer = series_norm(diff, t);
    double mis = 0, euclid = 0, size = 0;
    for (std::size_t c = 0; c < 2; ++c) {
      mis = std::max({mis, std::abs(grid.cloud.points[i][c] - p1[c]), std::abs(grid.cloud.points[j][c] - p2[c])});
      euclid += std::norm(grid.cloud.points[i][c] - grid.cloud.points[j][c]);
      size += std::norm(p1[c]);
    }
    out.grid_alignment_error = std::max(out.grid_alignment_error, mis / std::sqrt(size));
    const double in = inner_distance(graph, i, j).length;
    if (in < std::sqrt(euclid) * (1.0 - 1e-12)) out.metric_axiom_ok = false;
    out.t.push_back(t);
    out.inner.push_back(in);
    out.outer.push_back(outer);
    ratio.push_back(in / outer);
  }
  const auto c1 = chart_coordinates(e, arc1.evaluate(t_grid.front()));
  const auto c2 = chart_coordinates(e, arc2.evaluate(t_grid.front()));
  out.through_origin = c1.component != c2.component;
  out.fit = fit_loglog(out.t, ratio);
  out.exponent = -out.fit.slope;
  out.normally_embedded = !(out.exponent > opt.threshold);
  return out;
}

}  // namespace brieskorn::numeric
