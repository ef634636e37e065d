#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "tristeiner/analytic.hpp"

namespace tristeiner {

struct SweepSample {
  double l = 0.0;
  double j = 0.0;
  Phase phase;
  double slope = 0.0;
};

struct Snapshot {
  double l = 0.0;
  Phase phase;
  Network network;
};

struct EvolutionTrace {
  Thresholds thresholds;
  std::vector<SweepSample> samples;  // sorted by l
  std::vector<Snapshot> snapshots;   // thresholds in range, then requested budgets
};

/// Raised when a sample fails to solve; carries the offending budget.
class SweepError : public std::runtime_error {
 public:
  SweepError(double budget, const std::string& what);
  double budget() const { return budget_; }

 private:
  double budget_;
};

/// n evenly spaced budgets over [l_from, l_to] with every threshold budget in
/// that range spliced in. Samples are solved independently, on up to
/// `threads` worker threads (0 = hardware concurrency).
EvolutionTrace sweep(const TerminalTriangle& t, double l_from, double l_to, int n,
                     std::span<const double> snapshot_budgets = {}, unsigned threads = 1);

/// Phase-transition budgets of t.
Thresholds breakpoints(const TerminalTriangle& t);

/// Phase kinds along the trace with consecutive repeats removed.
std::vector<PhaseKind> phase_sequence(const EvolutionTrace& trace);

/// Order in which phases appear as the budget grows from zero to the
/// perimeter, with empty phases omitted.
std::vector<PhaseKind> expected_pathway(const Thresholds& th);

}  // namespace tristeiner
