#include "tristeiner/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tristeiner::oracle {

namespace {

constexpr std::array<int, 6> kHaltonBases{2, 3, 5, 7, 11, 13};

double radical_inverse(int base, long long i) {
  double inv = 1.0 / base;
  double f = inv;
  double out = 0.0;
  while (i > 0) {
    out += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return out;
}

// Halton point folded into the triangle.
Point interior_point(const TerminalTriangle& t, double u, double v) {
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  // Keep seeds off the boundary.
  u = 0.02 + 0.96 * u;
  v = 0.02 + 0.96 * v;
  const double w = std::max(0.0, 1.0 - u - v);
  const double sum = u + v + w;
  return (w / sum) * t.a() + (u / sum) * t.b() + (v / sum) * t.c();
}

std::vector<Point> unpack(const std::vector<double>& x) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) pts.push_back({x[i], x[i + 1]});
  return pts;
}

MinimizeResult polish(const std::function<double(const std::vector<double>&)>& f,
                      std::vector<double> x, double step, int max_evaluations) {
  MinimizeResult best = nelder_mead(f, std::move(x), step, max_evaluations);
  for (int i = 0; i < 12; ++i) {
    step *= 0.5;
    MinimizeResult again = nelder_mead(f, best.x, step, max_evaluations);
    const bool improved = again.f < best.f - 1e-15 * (1.0 + std::abs(best.f));
    again.evaluations += best.evaluations;
    if (again.f <= best.f) best = std::move(again);
    if (!improved) break;
  }
  return best;
}

}  // namespace

std::string TopologyId::name() const {
  switch (kind) {
    case TopologyKind::ThreeAnchorK3: return "three_anchor_k3";
    case TopologyKind::TwoAnchor: return "two_anchor(" + std::string(vertex_name(vertex)) + ")";
    case TopologyKind::OneAnchor:
    case TopologyKind::EdgeSubset: {
      std::string sides;
      if (mask & kSideAB) sides += sides.empty() ? "AB" : "+AB";
      if (mask & kSideBC) sides += sides.empty() ? "BC" : "+BC";
      if (mask & kSideCA) sides += sides.empty() ? "CA" : "+CA";
      if (sides.empty()) sides = "none";
      return (kind == TopologyKind::OneAnchor ? "one_anchor(" : "edges(") + sides + ")";
    }
  }
  return "unknown";
}

int TopologyId::free_anchors() const {
  switch (kind) {
    case TopologyKind::ThreeAnchorK3: return 3;
    case TopologyKind::TwoAnchor: return 2;
    case TopologyKind::OneAnchor: return 1;
    case TopologyKind::EdgeSubset: return 0;
  }
  return 0;
}

std::vector<TopologyId> all_topologies() {
  std::vector<TopologyId> out;
  out.push_back({TopologyKind::ThreeAnchorK3, VertexId::A, 0});
  for (int v = 0; v < 3; ++v) out.push_back({TopologyKind::TwoAnchor, vertex(v), 0});
  for (EdgeMask side : {kSideAB, kSideBC, kSideCA}) {
    out.push_back({TopologyKind::OneAnchor, VertexId::A, side});
  }
  for (EdgeMask mask = 1; mask <= kAllSides; ++mask) {
    out.push_back({TopologyKind::EdgeSubset, VertexId::A, mask});
  }
  return out;
}

Network build(const TerminalTriangle& t, const TopologyId& topo, const std::vector<Point>& anchors) {
  switch (topo.kind) {
    case TopologyKind::ThreeAnchorK3:
      return Network(t, anchors, {{0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}, {3, 5}});
    case TopologyKind::TwoAnchor: {
      const int p = index(topo.vertex);
      const auto [q, r] = others(topo.vertex);
      return Network(t, anchors, {{p, 3}, {p, 4}, {index(q), 3}, {index(r), 4}, {3, 4}});
    }
    case TopologyKind::OneAnchor: {
      std::vector<Edge> edges{{0, 3}, {1, 3}, {2, 3}};
      if (topo.mask & kSideAB) edges.emplace_back(0, 1);
      if (topo.mask & kSideBC) edges.emplace_back(1, 2);
      if (topo.mask & kSideCA) edges.emplace_back(0, 2);
      return Network(t, anchors, std::move(edges));
    }
    case TopologyKind::EdgeSubset:
      return Network::from_sides(t, topo.mask);
  }
  return Network(t, {}, {});
}

MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<double> x0, double step, int max_evaluations) {
  const std::size_t n = x0.size();
  MinimizeResult res;
  if (n == 0) {
    res.f = f(x0);
    res.x = std::move(x0);
    res.evaluations = 1;
    return res;
  }
  // Dimension-adaptive coefficients (Gao and Han).
  const double dn = static_cast<double>(n);
  const double expand = 1.0 + 2.0 / dn;
  const double contract = 0.75 - 0.5 / dn;
  const double shrink = 1.0 - 1.0 / dn;

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  std::vector<double> values(n + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto along = [&](std::vector<double>& out, double coef, const std::vector<double>& toward) {
    for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + coef * (toward[k] - centroid[k]);
  };

  while (evals < max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        diameter = std::max(diameter, std::abs(simplex[i][k] - simplex[best][k]));
      }
    }
    if (values[worst] - values[best] <= 1e-15 * (1.0 + std::abs(values[best])) &&
        diameter <= 1e-12) {
      break;
    }
    if (diameter <= 1e-15) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / dn;
    }

    along(trial, -1.0, simplex[worst]);
    const double f_reflect = eval(trial);
    if (f_reflect < values[best]) {
      along(trial2, -expand, simplex[worst]);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[second]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    bool accepted = false;
    if (f_reflect < values[worst]) {
      along(trial2, -contract, simplex[worst]);
      const double f_out = eval(trial2);
      if (f_out <= f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_out;
        accepted = true;
      }
    } else {
      along(trial2, contract, simplex[worst]);
      const double f_in = eval(trial2);
      if (f_in < values[worst]) {
        simplex[worst] = trial2;
        values[worst] = f_in;
        accepted = true;
      }
    }
    if (!accepted) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == best) continue;
        for (std::size_t k = 0; k < n; ++k) {
          simplex[i][k] = simplex[best][k] + shrink * (simplex[i][k] - simplex[best][k]);
        }
        values[i] = eval(simplex[i]);
      }
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const std::size_t best = static_cast<std::size_t>(best_it - values.begin());
  res.x = simplex[best];
  res.f = values[best];
  res.evaluations = evals;
  return res;
}

OracleResult optimize_topology(const TerminalTriangle& t, const TopologyId& topo, double L,
                               int seed, const OracleOptions& opts) {
  if (!(L > 0.0)) throw std::invalid_argument("oracle: budget must be > 0");
  const double limit = L + opts.budget_slack;

  if (topo.free_anchors() == 0) {
    Network net = build(t, topo, {});
    const bool fits = total_length(net) <= limit;
    const double j = evaluate(net).j;
    return OracleResult{std::move(net), j, topo, 0, fits};
  }

  const double scale = t.perimeter() / 3.0;
  const int dims = 2 * topo.free_anchors();
  const int max_evals = 1500 * dims;

  std::optional<OracleResult> best;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    const long long halton_index = 1 + 131LL * seed + restart;
    std::vector<double> x;
    for (int a = 0; a < topo.free_anchors(); ++a) {
      const Point p = interior_point(t, radical_inverse(kHaltonBases[2 * a], halton_index),
                                     radical_inverse(kHaltonBases[2 * a + 1], halton_index));
      x.push_back(p.x);
      x.push_back(p.y);
    }

    double weight = opts.penalty_start;
    for (int round = 0; round < opts.penalty_rounds; ++round) {
      auto penalized = [&](const std::vector<double>& v) {
        const Network net = build(t, topo, unpack(v));
        const double excess = std::max(0.0, total_length(net) - L);
        return evaluate(net).j + weight * excess * excess;
      };
      x = polish(penalized, x, (round == 0 ? 0.1 : 0.01) * scale, max_evals).x;
      weight *= opts.penalty_growth;
    }

    const Network raw = build(t, topo, unpack(x));
    Network net = collapse(raw, opts.collapse_tol);
    if (total_length(net) > limit) net = raw;
    const bool fits = total_length(net) <= limit;
    const double j = evaluate(net).j;
    const bool better = !best || (fits && !best->feasible) ||
                        (fits == best->feasible && j < best->j);
    if (better) best = OracleResult{std::move(net), j, topo, 0, fits};
  }
  best->restarts_used = opts.restarts;
  return *best;
}

OracleResult solve(const TerminalTriangle& t, double L, int seed, const OracleOptions& opts) {
  std::optional<OracleResult> best;
  for (const TopologyId& topo : all_topologies()) {
    OracleResult r = optimize_topology(t, topo, L, seed, opts);
    if (!r.feasible) continue;
    if (!best || r.j < best->j) best = std::move(r);
  }
  if (!best) {
    const TopologyId empty{TopologyKind::EdgeSubset, VertexId::A, 0};
    Network net = build(t, empty, {});
    const double j = evaluate(net).j;
    return OracleResult{std::move(net), j, empty, 0, true};
  }
  return *best;
}

}  // namespace tristeiner::oracle
