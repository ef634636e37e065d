#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string_view>
#include <variant>

namespace tristeiner {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point unit(Point p) { return (1.0 / norm(p)) * p; }
inline Point direction(double angle) { return {std::cos(angle), std::sin(angle)}; }
/// Counter-clockwise rotation.
inline Point rotate(Point p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}
/// Left-hand normal of p (p rotated by +pi/2).
constexpr Point perp(Point p) { return {-p.y, p.x}; }

enum class VertexId { A = 0, B = 1, C = 2 };

constexpr int index(VertexId v) { return static_cast<int>(v); }
constexpr VertexId vertex(int i) { return static_cast<VertexId>(i); }
std::string_view vertex_name(VertexId v);

/// The two vertices other than v, in cyclic order (v+1, v+2).
constexpr std::array<VertexId, 2> others(VertexId v) {
  return {vertex((index(v) + 1) % 3), vertex((index(v) + 2) % 3)};
}

/// Three fixed, pairwise distinct, non-collinear terminals.
class TerminalTriangle {
 public:
  static constexpr double kMinSeparation = 1e-9;
  static constexpr double kMinTwiceArea = 1e-9;

  /// Throws DegenerateGeometry on non-finite, coincident or collinear input.
  TerminalTriangle(Point a, Point b, Point c);

  Point a() const { return vertices_[0]; }
  Point b() const { return vertices_[1]; }
  Point c() const { return vertices_[2]; }
  Point operator[](VertexId v) const { return vertices_[index(v)]; }
  const std::array<Point, 3>& vertices() const { return vertices_; }

  /// Internal angle at vertex v.
  double angle(VertexId v) const;
  /// Length of the side opposite v.
  double side_opposite(VertexId v) const;
  double side(VertexId u, VertexId v) const { return distance((*this)[u], (*this)[v]); }
  double perimeter() const;
  double shortest_side() const;
  double twice_signed_area() const;
  /// Barycentric coordinates of p with respect to (a, b, c).
  std::array<double, 3> barycentric(Point p) const;

 private:
  std::array<Point, 3> vertices_;
};

/// Undirected angle p-apex-q in [0, pi]. Throws DegenerateGeometry when either
/// ray is shorter than 1e-12.
double angle_at(Point apex, Point p, Point q);

struct InteriorSteinerPoint {
  friend bool operator==(InteriorSteinerPoint, InteriorSteinerPoint) = default;
};
struct WideAngle {
  VertexId vertex;
  friend bool operator==(WideAngle, WideAngle) = default;
};
using TriangleClass = std::variant<InteriorSteinerPoint, WideAngle>;

/// Slack on the 2pi/3 test; a triangle exactly at the boundary is wide.
inline constexpr double kAngleTieTolerance = 1e-12;

TriangleClass classify(const TerminalTriangle& t);
inline bool has_interior_steiner_point(const TerminalTriangle& t) {
  return std::holds_alternative<InteriorSteinerPoint>(classify(t));
}

/// angle(incoming_from, anchor, out1) - angle(incoming_from, anchor, out2).
/// Zero iff the line through incoming_from and anchor bisects the angle
/// between the two outgoing edges.
double bisector_residual(Point incoming_from, Point anchor, Point out1, Point out2);

}  // namespace tristeiner
