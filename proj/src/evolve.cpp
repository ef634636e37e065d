#include "tristeiner/evolve.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

namespace tristeiner {

SweepError::SweepError(double budget, const std::string& what)
    : std::runtime_error("budget " + std::to_string(budget) + ": " + what), budget_(budget) {}

Thresholds breakpoints(const TerminalTriangle& t) { return thresholds(t); }

namespace {

std::vector<double> threshold_budgets(const Thresholds& th) {
  std::vector<double> out{th.l_min_edge, th.l_st};
  if (th.l1) out.push_back(*th.l1);
  out.push_back(th.l2);
  out.push_back(th.l3);
  return out;
}

}  // namespace

EvolutionTrace sweep(const TerminalTriangle& t, double l_from, double l_to, int n,
                     std::span<const double> snapshot_budgets, unsigned threads) {
  if (!(l_from < l_to)) throw std::invalid_argument("sweep: l_from must be below l_to");
  if (n < 2) throw std::invalid_argument("sweep: need at least two samples");
  if (!(l_from > 0.0)) throw std::invalid_argument("sweep: budgets must be positive");

  EvolutionTrace trace;
  trace.thresholds = thresholds(t);
  const Thresholds& th = trace.thresholds;
  const double tie = 1e-12 * std::max(1.0, th.l3);

  std::vector<double> marks;
  for (double b : threshold_budgets(th)) {
    if (b >= l_from - tie && b <= l_to + tie) marks.push_back(b);
  }
  std::vector<double> budgets;
  for (int i = 0; i < n; ++i) {
    const double l = i + 1 == n ? l_to : l_from + (l_to - l_from) * i / (n - 1);
    // Grid points that coincide with a threshold are replaced by it.
    const bool shadowed = std::any_of(marks.begin(), marks.end(),
                                      [&](double m) { return std::abs(m - l) <= tie; });
    if (!shadowed) budgets.push_back(l);
  }
  budgets.insert(budgets.end(), marks.begin(), marks.end());
  std::sort(budgets.begin(), budgets.end());
  budgets.erase(std::unique(budgets.begin(), budgets.end()), budgets.end());

  trace.samples.resize(budgets.size());
  std::vector<std::exception_ptr> errors(budgets.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < budgets.size(); i += stride) {
      try {
        const SolveResult r = solve(t, budgets[i], th);
        trace.samples[i] = {budgets[i], r.objective.j, r.phase, r.slope};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(budgets.size()));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
  }
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw SweepError(budgets[i], e.what());
    }
  }

  std::vector<double> snaps = marks;
  snaps.insert(snaps.end(), snapshot_budgets.begin(), snapshot_budgets.end());
  for (double l : snaps) {
    try {
      SolveResult r = solve(t, l, th);
      trace.snapshots.push_back({l, r.phase, std::move(r.network)});
    } catch (const std::exception& e) {
      throw SweepError(l, e.what());
    }
  }
  return trace;
}

std::vector<PhaseKind> phase_sequence(const EvolutionTrace& trace) {
  std::vector<PhaseKind> out;
  for (const SweepSample& s : trace.samples) {
    if (out.empty() || out.back() != s.phase.kind) out.push_back(s.phase.kind);
  }
  return out;
}

std::vector<PhaseKind> expected_pathway(const Thresholds& th) {
  std::vector<PhaseKind> out{PhaseKind::BelowTree, PhaseKind::SteinerTree};
  const double start = th.l1.value_or(th.l_st);
  if (th.l1 && *th.l1 > th.l_st) out.push_back(PhaseKind::ThreeAnchor);
  if (th.l2 > start) out.push_back(PhaseKind::TwoAnchor);
  if (th.l3 > th.l2) out.push_back(PhaseKind::OneAnchor);
  out.push_back(PhaseKind::Complete);
  return out;
}

}  // namespace tristeiner
