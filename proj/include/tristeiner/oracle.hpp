#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tristeiner/network.hpp"

// Structure-blind numerical search for the optimal network. Used to
// cross-check the analytic solver; it knows only the candidate wiring
// patterns, never where anchors should sit.
namespace tristeiner::oracle {

enum class TopologyKind { ThreeAnchorK3, TwoAnchor, OneAnchor, EdgeSubset };

/// Wiring pattern searched by the oracle.
///  - ThreeAnchorK3: anchors X' joined to terminal X and to each other.
///  - TwoAnchor(v): v joined to anchors Q', R'; Q'-Q, R'-R, Q'-R'.
///  - OneAnchor(side): the side plus one anchor joined to all terminals.
///  - EdgeSubset(mask): triangle sides only; mask 0 is the empty network.
struct TopologyId {
  TopologyKind kind = TopologyKind::EdgeSubset;
  VertexId vertex = VertexId::A;
  EdgeMask mask = 0;

  std::string name() const;
  int free_anchors() const;
  friend bool operator==(const TopologyId&, const TopologyId&) = default;
};

/// The fourteen topologies in tie-break order.
std::vector<TopologyId> all_topologies();

/// The topology's network with the given anchor positions.
Network build(const TerminalTriangle& t, const TopologyId& topo, const std::vector<Point>& anchors);

struct OracleOptions {
  int restarts = 16;
  double penalty_start = 1e3;
  double penalty_growth = 100.0;
  int penalty_rounds = 3;
  double collapse_tol = 1e-6;
  double budget_slack = 1e-7;
};

struct OracleResult {
  Network best;
  double j = 0.0;
  TopologyId topology;
  int restarts_used = 0;
  bool feasible = false;  // false when nothing fit within the budget
};

/// Best network of one topology: Nelder-Mead over anchor coordinates with
/// an exterior quadratic budget penalty, restarted from deterministic
/// low-discrepancy interior points.
OracleResult optimize_topology(const TerminalTriangle& t, const TopologyId& topo, double L,
                               int seed, const OracleOptions& opts = {});

/// Minimum over all topologies; ties go to the earlier topology.
OracleResult solve(const TerminalTriangle& t, double L, int seed, const OracleOptions& opts = {});

/// Derivative-free simplex minimization, exposed for testing.
struct MinimizeResult {
  std::vector<double> x;
  double f = 0.0;
  int evaluations = 0;
};
MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<double> x0, double step, int max_evaluations);

}  // namespace tristeiner::oracle
