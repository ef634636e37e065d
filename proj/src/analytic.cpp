#include "tristeiner/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tristeiner/errors.hpp"

namespace tristeiner {

namespace {

// Anchors closer than this to a terminal (or to each other) are merged.
constexpr double kMergeTol = 1e-10;
// Coinciding thresholds are snapped together within this distance.
constexpr double kThresholdTieTol = 1e-9;
constexpr int kMaxBisections = 200;
constexpr int kMergeScanSteps = 512;
const double kPhase1Rate = 3.0 * (kSqrt3 - 1.0);

// Bisection on a bracket where pred(lo) is true and pred(hi) is false.
// Returns {lo, hi} after convergence to adjacent doubles.
template <class Pred>
std::pair<double, double> bisect(Pred pred, double lo, double hi) {
  for (int i = 0; i < kMaxBisections; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return {lo, hi};
}

VertexId third_vertex(VertexId u, VertexId v) { return vertex(3 - index(u) - index(v)); }

int shortest_side_mask(const TerminalTriangle& t) {
  const double ab = t.side(VertexId::A, VertexId::B);
  const double bc = t.side(VertexId::B, VertexId::C);
  const double ca = t.side(VertexId::C, VertexId::A);
  if (ab <= bc && ab <= ca) return kSideAB;
  if (bc <= ca) return kSideBC;
  return kSideCA;
}

double one_anchor_length(const TerminalTriangle& t, std::array<VertexId, 2> pair, double alpha) {
  const Point anchor = one_anchor_point(t, pair, alpha);
  const VertexId r = third_vertex(pair[0], pair[1]);
  return t.side(pair[0], pair[1]) + distance(t[pair[0]], anchor) + distance(t[pair[1]], anchor) +
         distance(t[r], anchor);
}

Network two_anchor_network(const TerminalTriangle& t, VertexId pinned, const TwoAnchorShape& s) {
  const auto [q, r] = others(pinned);
  // Terminals 0..2, anchors 3 (serving q) and 4 (serving r).
  const Network raw(t, {s.anchor_q, s.anchor_r},
                    {{index(pinned), 3}, {index(pinned), 4}, {index(q), 3}, {index(r), 4}, {3, 4}});
  return collapse(raw, kMergeTol);
}

Network one_anchor_network(const TerminalTriangle& t, std::array<VertexId, 2> pair, Point anchor) {
  const VertexId r = third_vertex(pair[0], pair[1]);
  const Network raw(t, {anchor},
                    {{index(pair[0]), index(pair[1])}, {index(pair[0]), 3}, {index(pair[1]), 3},
                     {index(r), 3}});
  return collapse(raw, kMergeTol);
}

bool same_pair(std::array<VertexId, 2> a, VertexId u, VertexId v) {
  return (a[0] == u && a[1] == v) || (a[0] == v && a[1] == u);
}

double phase3_alpha(const TerminalTriangle& t, const Thresholds& th, double L) {
  const std::array<VertexId, 2> pair{th.first_pinned, th.second_pinned};
  const double alpha_lo = 0.5 * t.angle(th.last);
  const double alpha_hi = std::max(alpha_lo, kPi / 4.0 - 0.5 * th.beta_end);
  if (one_anchor_length(t, pair, alpha_hi) >= L) return alpha_hi;
  if (one_anchor_length(t, pair, alpha_lo) <= L) return alpha_lo;
  // Length decreases as the anchor angle opens; keep the side with length <= L.
  return bisect([&](double a) { return one_anchor_length(t, pair, a) > L; }, alpha_lo, alpha_hi)
      .second;
}

}  // namespace

std::string phase_tag(PhaseKind k) {
  switch (k) {
    case PhaseKind::BelowTree: return "below_tree";
    case PhaseKind::SteinerTree: return "steiner_tree";
    case PhaseKind::ThreeAnchor: return "three_anchor";
    case PhaseKind::TwoAnchor: return "two_anchor";
    case PhaseKind::OneAnchor: return "one_anchor";
    case PhaseKind::Complete: return "complete";
  }
  return "unknown";
}

std::optional<PhaseKind> phase_from_tag(const std::string& tag) {
  for (PhaseKind k : {PhaseKind::BelowTree, PhaseKind::SteinerTree, PhaseKind::ThreeAnchor,
                      PhaseKind::TwoAnchor, PhaseKind::OneAnchor, PhaseKind::Complete}) {
    if (phase_tag(k) == tag) return k;
  }
  return std::nullopt;
}

PhaseKind structure_of(const Network& n) {
  switch (n.anchor_count()) {
    case 0:
      if (n.edges().size() == 3) return PhaseKind::Complete;
      return n.edges().size() == 2 ? PhaseKind::SteinerTree : PhaseKind::BelowTree;
    case 1:
      return n.edges().size() == 3 ? PhaseKind::SteinerTree : PhaseKind::OneAnchor;
    case 2:
      return PhaseKind::TwoAnchor;
    default:
      return PhaseKind::ThreeAnchor;
  }
}

std::string Phase::tag() const { return phase_tag(kind); }

double slope_at(double alpha) {
  if (!(alpha > 0.0) || alpha > kPi / 4.0 + 1e-15) {
    throw OutOfRange("slope_at: alpha must lie in (0, pi/4]");
  }
  const double c = std::cos(alpha);
  return (2.0 * c - 2.0) / (2.0 * c - 1.0);
}

Network steiner_tree_network(const TerminalTriangle& t, const SteinerInfo& info) {
  if (const auto* at = std::get_if<SteinerAtVertex>(&info.kind)) {
    const auto [p, q] = others(at->vertex);
    return Network::from_sides(t, side_mask(at->vertex, p) | side_mask(at->vertex, q));
  }
  return Network(t, {info.point}, {{0, 3}, {1, 3}, {2, 3}});
}

Network phase1_config(const TerminalTriangle& t, double r) {
  const SteinerInfo info = steiner_info(t);
  if (!info.interior()) throw OutOfRange("phase1_config: triangle has no interior Steiner point");
  const double r_max = *std::min_element(info.spoke_lengths.begin(), info.spoke_lengths.end());
  if (!(r >= 0.0) || r > r_max * (1.0 + 1e-12)) {
    throw OutOfRange("phase1_config: r must lie in [0, min spoke length]");
  }
  if (r == 0.0) return steiner_tree_network(t, info);
  std::vector<Point> anchors;
  for (const Point& v : t.vertices()) anchors.push_back(info.point + r * unit(v - info.point));
  const Network raw(t, anchors, {{0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}, {3, 5}});
  return collapse(raw, kMergeTol);
}

TwoAnchorShape two_anchor_shape(const TerminalTriangle& t, VertexId pinned, double beta) {
  const auto [q, r] = others(pinned);
  const Point p_pos = t[pinned];
  const double q_len = t.side(pinned, q);
  const double r_len = t.side(pinned, r);
  const double apex = t.angle(pinned);

  // Triangle P-Q'-Q has angle 3pi/4 + beta/2 at Q' (Q lies on the outward
  // extension of the bisector of the base angle pi/2 - beta), angle
  // delta_q at P and x at Q. The same holds for R with delta_r, and
  // delta_q + delta_r + 2 beta = apex. Equal legs |PQ'| = |PR'| then fix x.
  const double k = kPi / 4.0 - 0.5 * beta;
  const double m = kPi / 2.0 + beta - apex;
  const double x = std::atan2(r_len * std::sin(m), q_len + r_len * std::cos(m));
  const double delta_q = k - x;
  const double delta_r = apex - 2.0 * beta - delta_q;
  const double s = std::sin(3.0 * kPi / 4.0 + 0.5 * beta);

  TwoAnchorShape shape;
  shape.beta = beta;
  shape.leg = q_len * std::sin(x) / s;
  shape.stem_q = q_len * std::sin(delta_q) / s;
  shape.stem_r = r_len * std::sin(delta_r) / s;

  // Rotate each side ray towards the other side.
  const double turn = cross(t[q] - p_pos, t[r] - p_pos) > 0.0 ? 1.0 : -1.0;
  shape.anchor_q = p_pos + shape.leg * rotate(unit(t[q] - p_pos), turn * delta_q);
  shape.anchor_r = p_pos + shape.leg * rotate(unit(t[r] - p_pos), -turn * delta_r);

  const double base = 2.0 * shape.leg * std::sin(beta);
  shape.length = 2.0 * shape.leg + base + shape.stem_q + shape.stem_r;
  shape.objective = shape.length + shape.stem_q + shape.stem_r;
  return shape;
}

Point one_anchor_point(const TerminalTriangle& t, std::array<VertexId, 2> pinned_pair,
                       double alpha) {
  if (pinned_pair[0] == pinned_pair[1]) throw std::invalid_argument("one_anchor_point: pair");
  if (!(alpha > 0.0) || !(alpha < kPi / 2.0)) {
    throw OutOfRange("one_anchor_point: alpha must lie in (0, pi/2)");
  }
  const Point p = t[pinned_pair[0]];
  const Point q = t[pinned_pair[1]];
  const Point r = t[third_vertex(pinned_pair[0], pinned_pair[1])];
  const double h = 0.5 * distance(p, q);
  const Point mid = 0.5 * (p + q);
  Point n = unit(perp(q - p));
  if (dot(n, r - mid) < 0.0) n = -1.0 * n;

  // Points seeing PQ at angle 2 alpha on r's side lie on a circle of radius
  // h / sin(2 alpha). The internal bisector from any of them passes through
  // the midpoint of the opposite arc, so the anchor is where the line from
  // that midpoint to r leaves the circle.
  const Point arc_mid = mid - (h * std::tan(alpha)) * n;
  const double radius = h / std::sin(2.0 * alpha);
  const Point d = r - arc_mid;
  const double along = 2.0 * radius * dot(d, n) / dot(d, d);
  return arc_mid + along * d;
}

Thresholds thresholds(const TerminalTriangle& t) {
  Thresholds th;
  th.steiner = steiner_info(t);
  th.l_min_edge = t.shortest_side();
  th.l_st = th.steiner.l_st;
  th.l3 = t.perimeter();

  const VertexId p = th.steiner.nearest_vertex();
  th.first_pinned = p;
  if (th.steiner.interior()) {
    th.l1 = th.l_st + kPhase1Rate * th.steiner.spoke_lengths[index(p)];
    th.beta_start = kPi / 6.0;
  } else {
    th.beta_start = t.angle(p) - kPi / 2.0;
  }

  // The two-anchor phase ends when either anchor reaches its terminal, i.e.
  // when the smaller signed stem length first changes sign.
  auto min_stem = [&](double beta) {
    const TwoAnchorShape s = two_anchor_shape(t, p, beta);
    return std::min(s.stem_q, s.stem_r);
  };
  const double beta_limit = 0.5 * t.angle(p);
  double beta_end = th.beta_start;
  if (min_stem(th.beta_start) > kMergeTol) {
    double prev = th.beta_start;
    bool found = false;
    for (int i = 1; i <= kMergeScanSteps; ++i) {
      const double beta = th.beta_start + (beta_limit - th.beta_start) * i / kMergeScanSteps;
      if (min_stem(beta) <= 0.0) {
        beta_end = bisect([&](double b) { return min_stem(b) > 0.0; }, prev, beta).second;
        found = true;
        break;
      }
      prev = beta;
    }
    if (!found) throw RootFindingFailure("thresholds: could not bracket the second merge");
  }
  th.beta_end = beta_end;

  const TwoAnchorShape end = two_anchor_shape(t, p, beta_end);
  const auto [q, r] = others(p);
  th.second_pinned = end.stem_q <= end.stem_r ? q : r;
  th.last = th.second_pinned == q ? r : q;
  th.l2 = end.length;

  if (th.l1 && std::abs(*th.l1 - th.l3) <= kThresholdTieTol) th.l1 = th.l3;
  if (std::abs(th.l2 - th.l3) <= kThresholdTieTol) th.l2 = th.l3;
  const double l2_floor = th.l1.value_or(th.l_st);
  if (th.l2 - l2_floor <= kThresholdTieTol) th.l2 = l2_floor;
  return th;
}

Network phase2_config(const TerminalTriangle& t, VertexId pinned, double leg) {
  const Thresholds th = thresholds(t);
  if (pinned != th.first_pinned) {
    throw std::invalid_argument("phase2_config: the two-anchor phase grows from " +
                                std::string(vertex_name(th.first_pinned)));
  }
  const double leg_start = two_anchor_shape(t, pinned, th.beta_start).leg;
  const double leg_end = two_anchor_shape(t, pinned, th.beta_end).leg;
  const double slack = 1e-12 * std::max(1.0, leg_end);
  if (!(leg >= leg_start - slack) || leg > leg_end + slack) {
    throw OutOfRange("phase2_config: leg outside [leg_start, leg_end]");
  }
  double beta = th.beta_start;
  if (leg >= leg_end) {
    beta = th.beta_end;
  } else if (leg > leg_start) {
    beta = bisect([&](double b) { return two_anchor_shape(t, pinned, b).leg <= leg; },
                  th.beta_start, th.beta_end)
               .first;
  }
  return two_anchor_network(t, pinned, two_anchor_shape(t, pinned, beta));
}

Network phase3_config(const TerminalTriangle& t, std::array<VertexId, 2> pinned_pair, double L) {
  const Thresholds th = thresholds(t);
  if (!same_pair(pinned_pair, th.first_pinned, th.second_pinned)) {
    throw std::invalid_argument("phase3_config: the one-anchor phase joins " +
                                std::string(vertex_name(th.first_pinned)) +
                                std::string(vertex_name(th.second_pinned)));
  }
  const double slack = 1e-12 * std::max(1.0, th.l3);
  if (!(L >= th.l2 - slack) || L > th.l3 + slack) {
    throw OutOfRange("phase3_config: budget outside [l2, l3]");
  }
  const double alpha = phase3_alpha(t, th, L);
  return one_anchor_network(t, pinned_pair, one_anchor_point(t, pinned_pair, alpha));
}

SolveResult solve(const TerminalTriangle& t, double L) { return solve(t, L, thresholds(t)); }

SolveResult solve(const TerminalTriangle& t, double L, const Thresholds& th) {
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("solve: budget must be > 0");
  const double eps = 1e-12 * std::max(1.0, th.l3);

  auto finish = [&](Network network, Phase phase, double slope, bool spends_budget) {
    const double used = total_length(network);
    if (spends_budget && std::abs(used - L) > 1e-9) {
      throw RootFindingFailure("solve: network length " + std::to_string(used) +
                               " does not match budget " + std::to_string(L));
    }
    const Objective obj = evaluate(network);
    return SolveResult{std::move(network), phase, used, obj, slope};
  };

  if (L < th.l_min_edge - eps) {
    return finish(Network(t, {}, {}), Phase{PhaseKind::BelowTree}, 0.0, false);
  }
  if (L < th.l_st - eps) {
    Phase phase{PhaseKind::BelowTree};
    phase.sides = static_cast<EdgeMask>(shortest_side_mask(t));
    return finish(Network::from_sides(t, phase.sides), phase, 0.0, false);
  }
  if (L <= th.l_st + eps) {
    const double alpha = th.steiner.interior() ? kPi / 6.0 : kPi / 4.0 - 0.5 * th.beta_start;
    return finish(steiner_tree_network(t, th.steiner), Phase{PhaseKind::SteinerTree},
                  slope_at(alpha), false);
  }
  if (th.l1 && L < *th.l1) {
    const double r_max = th.steiner.spoke_lengths[index(th.first_pinned)];
    const double r = std::clamp((L - th.l_st) / kPhase1Rate, 0.0, r_max);
    return finish(phase1_config(t, r), Phase{PhaseKind::ThreeAnchor}, slope_at(kPi / 6.0), true);
  }
  if (L < th.l2) {
    const VertexId p = th.first_pinned;
    double beta = th.beta_start;
    if (two_anchor_shape(t, p, th.beta_start).length < L) {
      beta = bisect([&](double b) { return two_anchor_shape(t, p, b).length <= L; },
                    th.beta_start, th.beta_end)
                 .first;
    }
    Phase phase{PhaseKind::TwoAnchor};
    phase.pinned = p;
    return finish(two_anchor_network(t, p, two_anchor_shape(t, p, beta)), phase,
                  slope_at(kPi / 4.0 - 0.5 * beta), true);
  }
  if (L < th.l3 - eps) {
    const std::array<VertexId, 2> pair{th.first_pinned, th.second_pinned};
    const double alpha = phase3_alpha(t, th, L);
    Phase phase{PhaseKind::OneAnchor};
    phase.pinned_pair = pair;
    return finish(one_anchor_network(t, pair, one_anchor_point(t, pair, alpha)), phase,
                  slope_at(alpha), true);
  }
  return finish(Network::complete(t), Phase{PhaseKind::Complete}, 0.0, false);
}

}  // namespace tristeiner
