#pragma once

// k-nearest-neighbor graph on a point cloud as a discrete surrogate of the
// inner metric, with Dijkstra shortest paths.

#include "brieskorn/numeric/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

namespace brieskorn::numeric {

struct GraphOptions {
  int k = 12;
  bool add_origin = true;
  /// With chart coordinates, neighbors must share a component, lie within
  /// `max_log_ratio` in log radius and `max_angle` in unrolled angle. This
  /// keeps edges from jumping between sheets that are close in R^4 but far
  /// apart on the surface.
  bool chart_restricted = true;
  double max_log_ratio = 0.6;
  double max_angle = std::numbers::pi / 2;
};

struct Edge {
  std::size_t to;
  double length;
};

class GeodesicGraph {
 public:
  GeodesicGraph(const PointCloud& cloud, GraphOptions opt = {}) : opt_(opt), count_(cloud.size()) {
    if (cloud.size() < 2) throw std::invalid_argument("geodesic graph needs at least two points");
    adj_.resize(cloud.size() + (opt.add_origin ? 1 : 0));
    const bool use_chart = opt.chart_restricted && cloud.has_charts();
    if (use_chart) {
      build_chart(cloud);
    } else {
      build_ambient(cloud);
    }
    if (opt.add_origin) link_origin(cloud);
    label_components();
  }

  /// Graph with explicit edges between cloud points; the origin, if added,
  /// is joined to points with radius <= 2 r_min.
  GeodesicGraph(const PointCloud& cloud, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                bool add_origin)
      : count_(cloud.size()) {
    opt_.add_origin = add_origin;
    adj_.resize(cloud.size() + (add_origin ? 1 : 0));
    for (const auto& [i, j] : edges) link(i, j, dist(cloud.points.at(i), cloud.points.at(j)));
    if (add_origin) link_origin(cloud);
    label_components();
  }

  [[nodiscard]] std::size_t vertex_count() const { return adj_.size(); }
  [[nodiscard]] std::size_t point_count() const { return count_; }
  [[nodiscard]] std::optional<std::size_t> origin() const {
    return opt_.add_origin ? std::optional<std::size_t>(count_) : std::nullopt;
  }
  [[nodiscard]] const std::vector<Edge>& neighbors(std::size_t v) const { return adj_.at(v); }
  [[nodiscard]] int component(std::size_t v) const { return label_.at(v); }
  [[nodiscard]] int component_count() const { return components_; }
  [[nodiscard]] std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& a : adj_) total += a.size();
    return total / 2;
  }

  /// Shortest-path lengths from `source` to every vertex (infinity if unreachable).
  [[nodiscard]] std::vector<double> distances_from(std::size_t source,
                                                   std::optional<std::size_t> target = std::nullopt) const {
    std::vector<double> dist(adj_.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist.at(source) = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d > dist[v]) continue;
      if (target && v == *target) break;
      for (const auto& e : adj_[v]) {
        const double nd = d + e.length;
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          heap.emplace(nd, e.to);
        }
      }
    }
    return dist;
  }

 private:
  void link_origin(const PointCloud& cloud) {
    const double r_min = *std::min_element(cloud.radii.begin(), cloud.radii.end());
    for (std::size_t i = 0; i < count_; ++i)
      if (cloud.radii[i] <= 2.0 * r_min) link(count_, i, cloud.radii[i]);
  }

  void link(std::size_t i, std::size_t j, double len) {
    if (i == j || len <= 0.0) return;
    for (const auto& e : adj_[i])
      if (e.to == j) return;
    adj_[i].push_back({j, len});
    adj_[j].push_back({i, len});
  }

  static double dist(const ComplexPoint& x, const ComplexPoint& y) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(x[i] - y[i]);
    return std::sqrt(s);
  }

  void connect_nearest(const PointCloud& cloud, std::size_t i, std::vector<std::pair<double, std::size_t>>& cand) {
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(opt_.k), cand.size());
    std::partial_sort(cand.begin(), cand.begin() + static_cast<long>(k), cand.end());
    for (std::size_t c = 0; c < k; ++c) link(i, cand[c].second, cand[c].first);
    (void)cloud;
  }

  void build_ambient(const PointCloud& cloud) {
    std::vector<std::pair<double, std::size_t>> cand;
    for (std::size_t i = 0; i < count_; ++i) {
      cand.clear();
      for (std::size_t j = 0; j < count_; ++j)
        if (j != i) cand.emplace_back(dist(cloud.points[i], cloud.points[j]), j);
      connect_nearest(cloud, i, cand);
    }
  }

  void build_chart(const PointCloud& cloud) {
    // Sort by (component, log radius) and scan a window.
    std::vector<std::size_t> order(count_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const auto& cx = cloud.charts[x];
      const auto& cy = cloud.charts[y];
      return std::pair(cx.component, cx.log_radius) < std::pair(cy.component, cy.log_radius);
    });
    std::vector<std::pair<double, std::size_t>> cand;
    for (std::size_t pos = 0; pos < count_; ++pos) {
      const std::size_t i = order[pos];
      const auto& ci = cloud.charts[i];
      cand.clear();
      auto visit = [&](std::size_t q) {
        const std::size_t j = order[q];
        const auto& cj = cloud.charts[j];
        double da = std::fmod(std::abs(ci.unrolled - cj.unrolled), ci.period);
        da = std::min(da, ci.period - da);
        if (da <= opt_.max_angle) cand.emplace_back(dist(cloud.points[i], cloud.points[j]), j);
      };
      for (std::size_t q = pos + 1; q < count_; ++q) {
        const auto& cq = cloud.charts[order[q]];
        if (cq.component != ci.component || cq.log_radius - ci.log_radius > opt_.max_log_ratio) break;
        visit(q);
      }
      for (std::size_t q = pos; q-- > 0;) {
        const auto& cq = cloud.charts[order[q]];
        if (cq.component != ci.component || ci.log_radius - cq.log_radius > opt_.max_log_ratio) break;
        visit(q);
      }
      connect_nearest(cloud, i, cand);
    }
  }

  void label_components() {
    label_.assign(adj_.size(), -1);
    components_ = 0;
    for (std::size_t s = 0; s < adj_.size(); ++s) {
      if (label_[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      label_[s] = components_;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& e : adj_[v]) {
          if (label_[e.to] < 0) {
            label_[e.to] = components_;
            stack.push_back(e.to);
          }
        }
      }
      ++components_;
    }
  }

  GraphOptions opt_{};
  std::size_t count_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<int> label_;
  int components_ = 0;
};

struct InnerDistance {
  double length = std::numeric_limits<double>::infinity();
  bool connected = false;
  int component_i = -1;
  int component_j = -1;
};

inline InnerDistance inner_distance(const GeodesicGraph& g, std::size_t i, std::size_t j) {
  InnerDistance out;
  out.component_i = g.component(i);
  out.component_j = g.component(j);
  out.connected = out.component_i == out.component_j;
  if (out.connected) out.length = g.distances_from(i, j)[j];
  return out;
}

}  // namespace brieskorn::numeric

namespace brieskorn::numeric {

/// Tensor grid in chart coordinates: dominant modulus r = 2^{-i/steps_per_octave}
/// for i in [i_min, i_max], `angles` equally spaced chart angles starting at 0,
/// every sheet. Nodes are joined to their chart neighbors at offsets
/// (1,0), (0,1), (1,1), (1,-1), (1,2), (2,1), (1,-2), (2,-1); angular
/// wrap-around follows the monodromy of the chart.
struct ChartGrid {
  PointCloud cloud;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  int steps_per_octave = 0;
  int i_min = 0;
  int i_max = 0;
  int angles = 0;
  int sheets = 0;

  [[nodiscard]] std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * static_cast<std::size_t>(i_max - i_min + 1) +
            static_cast<std::size_t>(i - i_min)) * static_cast<std::size_t>(angles) + static_cast<std::size_t>(j);
  }
};

inline ChartGrid build_chart_grid(const ExponentData& e, int steps_per_octave, int i_min, int i_max, int angles) {
  detail::require_surface(e);
  if (steps_per_octave < 1 || i_max <= i_min || angles < 4) throw std::invalid_argument("degenerate chart grid");
  const auto o = detail::orient(e);
  ChartGrid g;
  g.steps_per_octave = steps_per_octave;
  g.i_min = i_min;
  g.i_max = i_max;
  g.angles = angles;
  g.sheets = chart_sheet_count(e);
  g.cloud.source = "chart grid " + e.describe();
  for (int k = 0; k < g.sheets; ++k)
    for (int i = i_min; i <= i_max; ++i)
      for (int j = 0; j < angles; ++j) {
        const double r = std::exp2(-static_cast<double>(i) / steps_per_octave);
        const auto p = chart_point(e, r, kTwoPi * j / angles, k);
        g.cloud.add(p, chart_coordinates(e, p));
      }
  // Sheet reached after crossing angle 2 pi forward (+1) or backward (-1).
  auto wrap_sheet = [&](int k, int turns) {
    if (o.a1 == 0 || turns == 0) return k;
    return positive_mod(static_cast<long>(k) + static_cast<long>(turns) * o.a2, o.a1);
  };
  const std::array<std::pair<int, int>, 8> offsets{{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}}};
  for (int k = 0; k < g.sheets; ++k)
    for (int i = i_min; i <= i_max; ++i)
      for (int j = 0; j < angles; ++j)
        for (const auto& [di, dj] : offsets) {
          const int ni = i + di;
          if (ni > i_max) continue;
          int nj = j + dj;
          int turns = 0;
          if (nj >= angles) {
            nj -= angles;
            turns = 1;
          } else if (nj < 0) {
            nj += angles;
            turns = -1;
          }
          g.edges.emplace_back(g.index(i, j, k), g.index(ni, nj, wrap_sheet(k, turns)));
        }
  return g;
}

}  // namespace brieskorn::numeric
