#pragma once

#include <array>
#include <optional>
#include <string>

#include "tristeiner/fermat.hpp"
#include "tristeiner/network.hpp"

namespace tristeiner {

enum class PhaseKind { BelowTree, SteinerTree, ThreeAnchor, TwoAnchor, OneAnchor, Complete };

/// Combinatorial structure of the optimal network over a budget interval.
struct Phase {
  PhaseKind kind = PhaseKind::BelowTree;
  EdgeMask sides = 0;                      // BelowTree: triangle sides present
  VertexId pinned = VertexId::A;           // TwoAnchor: terminal the anchors grow from
  std::array<VertexId, 2> pinned_pair{};   // OneAnchor: terminals joined by a side

  std::string tag() const;
  friend bool operator==(const Phase&, const Phase&) = default;
};

/// Phase kind a network's wiring corresponds to, judged from its anchor
/// count and edges alone.
PhaseKind structure_of(const Network& n);

/// Stable snake_case name used in files ("three_anchor", ...).
std::string phase_tag(PhaseKind k);
std::optional<PhaseKind> phase_from_tag(const std::string& tag);

/// Budgets at which the optimal structure changes, plus the pathway they
/// imply: the two-anchor phase grows from `first_pinned`, ends when its
/// anchor reaches `second_pinned`, and the last anchor travels to `last`.
struct Thresholds {
  double l_min_edge = 0.0;
  double l_st = 0.0;
  std::optional<double> l1;  // absent in the wide-angle case
  double l2 = 0.0;
  double l3 = 0.0;
  SteinerInfo steiner;

  VertexId first_pinned = VertexId::A;
  VertexId second_pinned = VertexId::B;
  VertexId last = VertexId::C;
  double beta_start = 0.0;  // half apex angle where the two-anchor phase begins
  double beta_end = 0.0;    // ... and where it ends
};

/// Throws RootFindingFailure if the end of the two-anchor phase cannot be
/// bracketed.
Thresholds thresholds(const TerminalTriangle& t);

/// dJ/dL while an anchor with half-angle `alpha` between its two non-stem
/// edges moves along its stem: (2 cos a - 2) / (2 cos a - 1).
/// Throws OutOfRange outside (0, pi/4].
double slope_at(double alpha);

/// Three anchors at distance r from the Steiner point along its spokes.
/// r = 0 gives the Steiner tree; anchors that reach a terminal merge into it.
/// Throws OutOfRange unless 0 <= r <= min spoke, or when the triangle has no
/// interior Steiner point.
Network phase1_config(const TerminalTriangle& t, double r);

/// Two-anchor configuration at half apex angle beta: anchors at equal
/// distance `leg` from the pinned terminal P, each on the ray from its own
/// terminal that bisects its angle in triangle P-Q'-R'.
struct TwoAnchorShape {
  double beta = 0.0;
  double leg = 0.0;
  Point anchor_q;  // anchor serving others(pinned)[0]
  Point anchor_r;  // anchor serving others(pinned)[1]
  double stem_q = 0.0;  // |Q Q'|, signed: negative once Q' has passed Q
  double stem_r = 0.0;
  double length = 0.0;     // total network length
  double objective = 0.0;  // J, via the known routing
};
TwoAnchorShape two_anchor_shape(const TerminalTriangle& t, VertexId pinned, double beta);

/// Network of the two-anchor phase with anchors at distance `leg` from
/// `pinned`. `pinned` must be the terminal the phase grows from.
/// Throws OutOfRange if leg lies outside the phase.
Network phase2_config(const TerminalTriangle& t, VertexId pinned, double leg);

/// Position of the single anchor serving the third terminal when the other
/// two are joined by a side and the anchor sees that side at angle 2*alpha.
Point one_anchor_point(const TerminalTriangle& t, std::array<VertexId, 2> pinned_pair,
                       double alpha);

/// Network of the one-anchor phase with total length L.
/// Throws OutOfRange unless l2 <= L <= l3.
Network phase3_config(const TerminalTriangle& t, std::array<VertexId, 2> pinned_pair, double L);

/// The Steiner tree as a network (one anchor at the Steiner point, or the
/// two sides meeting at the wide vertex).
Network steiner_tree_network(const TerminalTriangle& t, const SteinerInfo& info);

struct SolveResult {
  Network network;
  Phase phase;
  double l_used = 0.0;
  Objective objective;
  double slope = 0.0;  // right-sided dJ/dL
};

/// Optimal network for budget L > 0.
SolveResult solve(const TerminalTriangle& t, double L);
/// Same, reusing precomputed thresholds for t.
SolveResult solve(const TerminalTriangle& t, double L, const Thresholds& th);

}  // namespace tristeiner
