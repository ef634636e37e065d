#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tristeiner/geom.hpp"

namespace tristeiner {

enum class NodeKind { Terminal, Anchor };

struct Node {
  int id = 0;
  NodeKind kind = NodeKind::Anchor;
  std::optional<VertexId> terminal;  // set iff kind == Terminal
  Point pos;
};

/// Undirected edge between node ids, stored with first < second.
using Edge = std::pair<int, int>;

/// Subset of the triangle sides. Bit 0 = AB, bit 1 = BC, bit 2 = CA.
using EdgeMask = std::uint8_t;
inline constexpr EdgeMask kSideAB = 1;
inline constexpr EdgeMask kSideBC = 2;
inline constexpr EdgeMask kSideCA = 4;
inline constexpr EdgeMask kAllSides = 7;
EdgeMask side_mask(VertexId u, VertexId v);

/// Terminals plus anchors joined by straight edges. Nodes 0..2 are the
/// terminals A, B, C; anchors follow. Edge lengths are always recomputed
/// from node positions.
///
/// Construction enforces the structural invariants (valid ids, no
/// self-loops, no duplicate edges). The geometric optimality conditions
/// (anchor degree, interiority, bisectors) are reported by validate().
class Network {
 public:
  Network(TerminalTriangle triangle, const std::vector<Point>& anchors, std::vector<Edge> edges);

  static Network from_sides(const TerminalTriangle& t, EdgeMask mask);
  static Network complete(const TerminalTriangle& t) { return from_sides(t, kAllSides); }

  const TerminalTriangle& triangle() const { return triangle_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int anchor_count() const { return static_cast<int>(nodes_.size()) - 3; }
  std::vector<Point> anchors() const;
  int degree(int node) const;
  double edge_length(const Edge& e) const;
  bool has_edge(int u, int v) const;

 private:
  TerminalTriangle triangle_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

double total_length(const Network& n);

/// Pairwise terminal distances over the network and their sum.
struct Objective {
  double d_ab = 0.0;
  double d_bc = 0.0;
  double d_ac = 0.0;
  double j = 0.0;
};

/// Distance assigned to a disconnected terminal pair unless overridden.
double default_penalty(const TerminalTriangle& t);

/// Shortest paths from each terminal, computed by Dijkstra.
struct TerminalPaths {
  std::array<std::vector<double>, 3> dist;
  std::array<std::vector<int>, 3> pred;  // -1 for the source or unreachable
};
TerminalPaths terminal_paths(const Network& n);

Objective evaluate(const Network& n, std::optional<double> penalty = std::nullopt);

enum class ViolationKind {
  Degree,          // anchor degree != 3
  Interiority,     // anchor not strictly inside the triangle
  Stem,            // no unique edge shared by two terminal-pair paths
  Bisector,        // stem does not bisect the other two edges
  AnchorAngle,     // angle between the two non-stem edges exceeds pi/3
  SteinerJunction, // three-way junction whose edges do not meet at 2pi/3
  Equilateral,     // three-anchor triangle not equilateral
  Centroid,        // three-anchor triangle not centered on the Steiner point
};

struct Violation {
  ViolationKind kind;
  int node = -1;
  double magnitude = 0.0;
  std::string detail;
};

std::string_view violation_name(ViolationKind k);

/// Checks every anchor against the optimality conditions for three
/// terminals. An empty result means the network passes.
std::vector<Violation> validate(const Network& n, double tol);

/// Merges anchors lying within `tol` of a terminal or of another anchor,
/// replaces straight-through degree-2 anchors with a direct edge, and drops
/// the self-loops, duplicate edges and isolated anchors this produces.
Network collapse(const Network& n, double tol);

}  // namespace tristeiner
