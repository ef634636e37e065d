#include "tristeiner/fermat.hpp"

#include <algorithm>

#include "tristeiner/errors.hpp"

namespace tristeiner {

namespace {

// Apex of the equilateral triangle erected on segment pq, on the side away
// from `away`.
Point outward_apex(Point p, Point q, Point away) {
  const Point mid = 0.5 * (p + q);
  Point n = unit(perp(q - p));
  if (dot(n, away - mid) > 0.0) n = -1.0 * n;
  return mid + (0.5 * kSqrt3 * distance(p, q)) * n;
}

Point intersect_lines(Point p0, Point p1, Point q0, Point q1) {
  const Point d1 = p1 - p0;
  const Point d2 = q1 - q0;
  const double s = cross(q0 - p0, d2) / cross(d1, d2);
  return p0 + s * d1;
}

}  // namespace

VertexId SteinerInfo::nearest_vertex() const {
  if (const auto* at = std::get_if<SteinerAtVertex>(&kind)) return at->vertex;
  const auto it = std::min_element(spoke_lengths.begin(), spoke_lengths.end());
  return vertex(static_cast<int>(it - spoke_lengths.begin()));
}

SteinerInfo steiner_info(const TerminalTriangle& t) {
  SteinerInfo info;
  const TriangleClass cls = classify(t);
  if (const auto* wide = std::get_if<WideAngle>(&cls)) {
    const VertexId w = wide->vertex;
    info.point = t[w];
    info.kind = SteinerAtVertex{w};
    for (int i = 0; i < 3; ++i) info.spoke_lengths[i] = distance(t[w], t.vertices()[i]);
    info.spoke_lengths[index(w)] = 0.0;
    const auto [p, q] = others(w);
    info.l_st = t.side(w, p) + t.side(w, q);
    return info;
  }

  const Point a = t.a(), b = t.b(), c = t.c();
  const Point a_apex = outward_apex(b, c, a);
  const Point b_apex = outward_apex(c, a, b);
  const Point c_apex = outward_apex(a, b, c);
  // Average the three pairwise intersections; they agree up to rounding.
  const Point ab = intersect_lines(a, a_apex, b, b_apex);
  const Point bc = intersect_lines(b, b_apex, c, c_apex);
  const Point ca = intersect_lines(c, c_apex, a, a_apex);
  info.point = (1.0 / 3.0) * (ab + bc + ca);
  info.kind = SteinerInterior{};
  for (int i = 0; i < 3; ++i) info.spoke_lengths[i] = distance(info.point, t.vertices()[i]);
  info.l_st = info.spoke_lengths[0] + info.spoke_lengths[1] + info.spoke_lengths[2];
  return info;
}

Point weiszfeld_point(const TerminalTriangle& t, double tol, int max_iter) {
  const auto& v = t.vertices();
  Point x = (1.0 / 3.0) * (v[0] + v[1] + v[2]);
  const double scale = t.perimeter();
  int perturbations = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    Point num{};
    double den = 0.0;
    bool on_terminal = false;
    for (const Point& p : v) {
      const double d = distance(x, p);
      if (d < 1e-14 * scale) {
        on_terminal = true;
        break;
      }
      num = num + (1.0 / d) * p;
      den += 1.0 / d;
    }
    if (on_terminal) {
      // Weiszfeld is undefined at a terminal; nudge off it and continue.
      const double eps = 1e-6 * scale * static_cast<double>(++perturbations);
      x = x + Point{eps, 0.5 * eps};
      continue;
    }
    const Point next = (1.0 / den) * num;
    const double step = distance(next, x);
    x = next;
    if (step < tol) return x;
  }
  throw NoConvergence("weiszfeld_point: step still above tolerance after max_iter iterations");
}

}  // namespace tristeiner
