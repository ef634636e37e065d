#include "tristeiner/geom.hpp"

#include <algorithm>
#include <string>

#include "tristeiner/errors.hpp"

namespace tristeiner {

std::string_view vertex_name(VertexId v) {
  switch (v) {
    case VertexId::A: return "A";
    case VertexId::B: return "B";
    case VertexId::C: return "C";
  }
  return "?";
}

TerminalTriangle::TerminalTriangle(Point a, Point b, Point c) : vertices_{a, b, c} {
  for (const Point& p : vertices_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DegenerateGeometry("terminal coordinates must be finite");
    }
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    if (distance(vertices_[i], vertices_[j]) <= kMinSeparation) {
      throw DegenerateGeometry("terminals " + std::string(vertex_name(vertex(i))) + " and " +
                               std::string(vertex_name(vertex(j))) +
                               " coincide (pairwise distance must exceed 1e-9)");
    }
  }
  if (std::abs(twice_signed_area()) <= kMinTwiceArea) {
    throw DegenerateGeometry("terminals are collinear (twice signed area must exceed 1e-9)");
  }
}

double TerminalTriangle::angle(VertexId v) const {
  const auto [p, q] = others(v);
  return angle_at((*this)[v], (*this)[p], (*this)[q]);
}

double TerminalTriangle::side_opposite(VertexId v) const {
  const auto [p, q] = others(v);
  return side(p, q);
}

double TerminalTriangle::perimeter() const {
  return side_opposite(VertexId::A) + side_opposite(VertexId::B) + side_opposite(VertexId::C);
}

double TerminalTriangle::shortest_side() const {
  return std::min({side_opposite(VertexId::A), side_opposite(VertexId::B),
                   side_opposite(VertexId::C)});
}

double TerminalTriangle::twice_signed_area() const {
  return cross(vertices_[1] - vertices_[0], vertices_[2] - vertices_[0]);
}

std::array<double, 3> TerminalTriangle::barycentric(Point p) const {
  const double area = twice_signed_area();
  const auto& v = vertices_;
  return {cross(v[1] - p, v[2] - p) / area, cross(v[2] - p, v[0] - p) / area,
          cross(v[0] - p, v[1] - p) / area};
}

double angle_at(Point apex, Point p, Point q) {
  const Point u = p - apex;
  const Point w = q - apex;
  if (norm(u) < 1e-12 || norm(w) < 1e-12) {
    throw DegenerateGeometry("angle_at: ray shorter than 1e-12");
  }
  return std::atan2(std::abs(cross(u, w)), dot(u, w));
}

TriangleClass classify(const TerminalTriangle& t) {
  VertexId widest = VertexId::A;
  double widest_angle = t.angle(VertexId::A);
  for (VertexId v : {VertexId::B, VertexId::C}) {
    const double a = t.angle(v);
    if (a > widest_angle) {
      widest_angle = a;
      widest = v;
    }
  }
  if (widest_angle < 2.0 * kPi / 3.0 - kAngleTieTolerance) return InteriorSteinerPoint{};
  return WideAngle{widest};
}

double bisector_residual(Point incoming_from, Point anchor, Point out1, Point out2) {
  return angle_at(anchor, incoming_from, out1) - angle_at(anchor, incoming_from, out2);
}

}  // namespace tristeiner
