// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "tristeiner/evolve.hpp"
#include "tristeiner/io.hpp"
#include "tristeiner/oracle.hpp"

namespace fs = std::filesystem;
using namespace tristeiner;
using K = PhaseKind;

namespace {

const double kSqrt3d = std::sqrt(3.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome slope_law() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  const double want = (1 - kSqrt3d) / 2;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const TerminalTriangle t = testing::random_triangle(rng);
    const Thresholds th = thresholds(t);
    const EvolutionTrace tr = sweep(t, th.l_st, *th.l1, 40);
    int used = 0;
    for (size_t k = 1; k < tr.samples.size(); ++k) {
      const SweepSample &a = tr.samples[k - 1], &b = tr.samples[k];
      if (a.phase.kind != K::ThreeAnchor || b.phase.kind != K::ThreeAnchor) continue;
      worst = std::max(worst, std::abs((b.j - a.j) / (b.l - a.l) - want));
      ++used;
    }
    if (used == 0) fail(o, "no three-anchor samples");
  }
  const double secs = seconds_since(t0);
  if (worst > 1e-6) fail(o, "slope error " + num(worst));
  if (secs >= 5.0) fail(o, "runtime " + num(secs) + " s");
  if (o.pass) o.detail = "max slope error " + num(worst) + ", " + num(secs) + " s";
  return o;
}

Outcome equilateral_degeneracy() {
  Outcome o;
  const TerminalTriangle t = testing::equilateral();
  const Thresholds th = thresholds(t);
  if (std::abs(th.l_st - kSqrt3d) > 1e-12) fail(o, "l_st off by " + num(th.l_st - kSqrt3d));
  if (!th.l1 || std::abs(*th.l1 - 3.0) > 1e-9) fail(o, "l1 is not 3");
  if (std::abs(t.perimeter() - 3.0) > 1e-9) fail(o, "perimeter is not 3");
  if (std::abs(th.l2 - 3.0) > 1e-9 || std::abs(th.l3 - 3.0) > 1e-9) fail(o, "l2/l3 not at 3");
  const EvolutionTrace tr = sweep(t, th.l_st, 3.0, 201);
  if (phase_sequence(tr) != std::vector<K>{K::SteinerTree, K::ThreeAnchor, K::Complete}) {
    fail(o, "phase sequence is not steiner_tree, three_anchor, complete");
  }
  if (o.pass) o.detail = "l_st, l1, l2, l3 as expected; no two- or one-anchor samples";
  return o;
}

Outcome steiner_identity() {
  Outcome o;
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const TerminalTriangle t = i % 2 ? testing::random_triangle(rng) : testing::random_wide(rng);
    const double l_st = thresholds(t).l_st;
    worst = std::max(worst, std::abs(solve(t, l_st).objective.j - 2 * l_st));
  }
  if (worst > 1e-9) fail(o, "max |J - 2 l_st| = " + num(worst));
  if (o.pass) o.detail = "max |J - 2 l_st| = " + num(worst);
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  std::mt19937_64 rng(1004);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const TerminalTriangle t = i % 2 ? testing::random_triangle(rng) : testing::random_wide(rng);
    const Thresholds th = thresholds(t);
    const EvolutionTrace tr = sweep(t, th.l_st, th.l3, 400, {}, 1);
    for (const SweepSample& s : tr.samples) {
      const auto v = validate(solve(t, s.l, th).network, 1e-9);
      ++checked;
      if (!v.empty()) {
        fail(o, std::string(violation_name(v.front().kind)) + " at L=" + num(s.l));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " networks, no violations";
  return o;
}

Outcome wide_exclusion() {
  Outcome o;
  std::mt19937_64 rng(1005);
  const std::vector<K> want{K::BelowTree, K::SteinerTree, K::TwoAnchor, K::OneAnchor, K::Complete};
  for (int i = 0; i < 50; ++i) {
    const TerminalTriangle t = testing::random_wide(rng);
    const EvolutionTrace tr = sweep(t, 0.5 * t.shortest_side(), 1.05 * t.perimeter(), 400);
    for (const SweepSample& s : tr.samples) {
      if (s.phase.kind == K::ThreeAnchor) fail(o, "three_anchor at L=" + num(s.l));
    }
    if (phase_sequence(tr) != want) fail(o, "phase order differs on triangle " + std::to_string(i));
  }
  if (o.pass) o.detail = "50 triangles, no three-anchor sample, order as enumerated";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  // Cycle through every phase so each appears in the sample.
  const K targets[] = {K::BelowTree, K::SteinerTree, K::ThreeAnchor, K::TwoAnchor, K::OneAnchor,
                       K::Complete};
  double worst_gap = 0.0, lowest = 0.0;
  for (int i = 0; i < 20; ++i) {
    const K target = targets[i % 6];
    const bool wide = target != K::ThreeAnchor && i % 4 == 3;
    const TerminalTriangle t = wide ? testing::random_wide(rng) : testing::random_triangle(rng);
    const Thresholds th = thresholds(t);
    double l = 0.0;
    switch (target) {
      case K::BelowTree: l = th.l_min_edge + u(rng) * (th.l_st - th.l_min_edge); break;
      case K::SteinerTree: l = th.l_st; break;
      case K::ThreeAnchor: l = th.l_st + u(rng) * (*th.l1 - th.l_st); break;
      case K::TwoAnchor: {
        const double lo = th.l1.value_or(th.l_st);
        l = lo + u(rng) * (th.l2 - lo);
        break;
      }
      case K::OneAnchor: l = th.l2 + u(rng) * (th.l3 - th.l2); break;
      case K::Complete: l = th.l3 * (1 + u(rng)); break;
    }
    const SolveResult a = solve(t, l, th);
    if (a.phase.kind != target) fail(o, "sample " + std::to_string(i) + " missed its phase");
    const oracle::OracleResult r = oracle::solve(t, l, i);
    const double gap = r.j - a.objective.j;
    worst_gap = std::max(worst_gap, std::abs(gap));
    lowest = std::min(lowest, gap);
    if (std::abs(gap) > 1e-3 || gap < -1e-6) fail(o, "gap " + num(gap) + " at sample " + std::to_string(i));
  }
  const double secs = seconds_since(t0);
  if (secs >= 60.0) fail(o, "runtime " + num(secs) + " s");
  if (o.pass) {
    o.detail = "max |gap| " + num(worst_gap) + ", most negative " + num(lowest) + ", " +
               num(secs) + " s";
  }
  return o;
}

Outcome continuity_convexity() {
  Outcome o;
  std::mt19937_64 rng(1007);
  const double d = 1e-6;
  double worst_jump = 0.0;
  for (int i = 0; i < 50; ++i) {
    const TerminalTriangle t = i % 2 ? testing::random_triangle(rng) : testing::random_wide(rng);
    const Thresholds th = thresholds(t);
    std::vector<double> at{th.l2, th.l3};
    if (th.l1) at.push_back(*th.l1);
    for (double l : at) {
      worst_jump = std::max(
          worst_jump, std::abs(solve(t, l - d, th).objective.j - solve(t, l + d, th).objective.j));
    }
    // Below l_st the network is disconnected; compare from the connected side.
    worst_jump = std::max(
        worst_jump, std::abs(solve(t, th.l_st, th).objective.j - solve(t, th.l_st + d, th).objective.j));
    const EvolutionTrace tr = sweep(t, th.l_st, th.l3, 400);
    for (size_t k = 2; k < tr.samples.size(); ++k) {
      const SweepSample &a = tr.samples[k - 2], &b = tr.samples[k - 1], &c = tr.samples[k];
      const double left = (b.j - a.j) / (b.l - a.l), right = (c.j - b.j) / (c.l - b.l);
      if (right < left - 1e-9) fail(o, "slope decreases at L=" + num(b.l));
      if (b.slope < a.slope - 1e-12) fail(o, "reported slope decreases at L=" + num(b.l));
    }
  }
  if (worst_jump > 4 * d) fail(o, "jump " + num(worst_jump));
  if (o.pass) o.detail = "max jump " + num(worst_jump) + " (limit 4e-06), slopes non-decreasing";
  return o;
}

Outcome phase_monotonicity() {
  Outcome o;
  std::mt19937_64 rng(1008);
  const std::vector<K> interior{K::SteinerTree, K::ThreeAnchor, K::TwoAnchor, K::OneAnchor,
                                K::Complete};
  const std::vector<K> wide{K::SteinerTree, K::TwoAnchor, K::OneAnchor, K::Complete};
  for (int i = 0; i < 50; ++i) {
    const TerminalTriangle t = i % 3 == 2 ? testing::random_wide(rng) : testing::random_triangle(rng);
    const EvolutionTrace tr = sweep(t, thresholds(t).l_st, t.perimeter(), 400);
    const bool is_interior = has_interior_steiner_point(t);
    if (phase_sequence(tr) != (is_interior ? interior : wide)) {
      fail(o, "phase order differs on triangle " + std::to_string(i));
      continue;
    }
    std::array<VertexId, 3> by_angle{VertexId::A, VertexId::B, VertexId::C};
    std::sort(by_angle.begin(), by_angle.end(),
              [&](VertexId x, VertexId y) { return t.angle(x) > t.angle(y); });
    std::optional<VertexId> first, second;
    for (const SweepSample& s : tr.samples) {
      if (s.phase.kind == K::TwoAnchor && !first) first = s.phase.pinned;
      if (s.phase.kind == K::OneAnchor && !second) {
        const auto p = s.phase.pinned_pair;
        if (first && (p[0] == *first || p[1] == *first)) second = p[0] == *first ? p[1] : p[0];
      }
    }
    if (!first || *first != by_angle[0]) fail(o, "first merge is not the largest angle");
    if (!second || *second != by_angle[1]) fail(o, "second merge is not the second largest angle");
  }
  if (o.pass) o.detail = "50 triangles, order and merge sequence as predicted";
  return o;
}

std::string slurp(const fs::path& p) {
  try {
    return io::read_file(p);
  } catch (const io::ParseError&) {
    return "<missing " + p.string() + ">";
  }
}

int sh(const std::string& cmd) { return std::system(cmd.c_str()); }

Outcome cli_determinism() {
  Outcome o;
  const fs::path tool = TRISTEINER_CLI_PATH;
  const fs::path golden = TRISTEINER_GOLDEN_DIR;
  const fs::path work = fs::temp_directory_path() / "tristeiner_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);
  struct Case {
    std::string name, budget, from, to;
  };
  const std::vector<Case> cases{{"equilateral", "2", "1.5", "3.2"},
                                {"scalene", "10.5", "6", "12"},
                                {"wide", "3.1", "1", "4.5"}};
  const std::string exe = "\"" + tool.string() + "\"";
  for (const Case& c : cases) {
    const std::string spec = "\"" + (golden / (c.name + ".json")).string() + "\"";
    for (int rep = 0; rep < 2; ++rep) {
      const std::string suffix = "_" + std::to_string(rep);
      const fs::path sol = work / (c.name + "_solve" + suffix + ".json");
      const fs::path tab = work / (c.name + "_sweep" + suffix + ".csv");
      const fs::path ver = work / (c.name + "_verify" + suffix + ".txt");
      int rc = sh(exe + " solve --spec " + spec + " --budget " + c.budget + " --out \"" +
                  sol.string() + "\" > /dev/null");
      rc |= sh(exe + " sweep --spec " + spec + " --from " + c.from + " --to " + c.to +
               " --samples 60 --out \"" + tab.string() + "\" > /dev/null");
      rc |= sh(exe + " verify --spec " + spec + " --budgets " + c.budget + " --seed 3 > \"" +
               ver.string() + "\"");
      if (rc != 0) fail(o, c.name + ": non-zero exit");
    }
    for (const std::string kind : {"_solve", "_sweep", "_verify"}) {
      const std::string ext = kind == "_solve" ? ".json" : kind == "_sweep" ? ".csv" : ".txt";
      const std::string a = slurp(work / (c.name + kind + "_0" + ext));
      const std::string b = slurp(work / (c.name + kind + "_1" + ext));
      if (a != b) fail(o, c.name + kind + ": repeated runs differ");
      if (kind != "_verify" && a != slurp(golden / (c.name + kind + ext))) {
        fail(o, c.name + kind + ": differs from golden file");
      }
    }
  }
  fs::remove_all(work);
  if (o.pass) o.detail = "solve/sweep/verify byte-identical; 6 golden files match";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"slope law in the three-anchor phase", slope_law},
      {"equilateral degeneracy", equilateral_degeneracy},
      {"Steiner-tree objective identity", steiner_identity},
      {"structural invariants", structural_invariants},
      {"wide-angle exclusion", wide_exclusion},
      {"oracle cross-validation", oracle_agreement},
      {"continuity and convexity", continuity_convexity},
      {"phase monotonicity", phase_monotonicity},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
