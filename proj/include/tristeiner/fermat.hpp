#pragma once

#include <array>
#include <variant>

#include "tristeiner/geom.hpp"

namespace tristeiner {

struct SteinerInterior {
  friend bool operator==(SteinerInterior, SteinerInterior) = default;
};
struct SteinerAtVertex {
  VertexId vertex;
  friend bool operator==(SteinerAtVertex, SteinerAtVertex) = default;
};
using SteinerKind = std::variant<SteinerInterior, SteinerAtVertex>;

/// The Fermat-Torricelli point of a terminal triangle and the Steiner tree it
/// spans. In the wide-angle case the point is the wide vertex and its own
/// spoke length is zero.
struct SteinerInfo {
  Point point;
  SteinerKind kind;
  std::array<double, 3> spoke_lengths{};
  double l_st = 0.0;

  bool interior() const { return std::holds_alternative<SteinerInterior>(kind); }
  /// Vertex with the shortest spoke (the wide vertex when not interior).
  VertexId nearest_vertex() const;
};

/// Torricelli construction: intersection of the lines joining each vertex
/// to the apex of the outward equilateral triangle on the opposite side.
SteinerInfo steiner_info(const TerminalTriangle& t);

/// Weiszfeld fixed-point iteration for the geometric median of the three
/// terminals. Used as an independent check of steiner_info.
/// Throws NoConvergence if the step is still >= tol after max_iter iterations.
Point weiszfeld_point(const TerminalTriangle& t, double tol = 1e-13, int max_iter = 100000);

}  // namespace tristeiner
