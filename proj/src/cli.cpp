#include "tristeiner/cli.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tristeiner/errors.hpp"
#include "tristeiner/io.hpp"
#include "tristeiner/oracle.hpp"
#include "tristeiner/svg.hpp"

namespace tristeiner::cli {

namespace {

// Accepted band for j_oracle - j_analytic.
constexpr double kMaxUndercut = 1e-6;
constexpr double kMaxShortfall = 1e-3;

struct SolveArgs {
  std::string spec, out, image;
  double budget = 0.0;
};

struct SweepArgs {
  std::string spec, out, curve_image;
  double from = 0.0, to = 0.0;
  int samples = 0;
};

struct VerifyArgs {
  std::string spec;
  std::vector<double> budgets;
  int seed = 0;
};

// Maps the error taxonomy onto exit codes with a one-line diagnostic.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateGeometry& e) {
    err << "error: invalid terminals: " << e.what() << "\n";
    return kGeometry;
  } catch (const SweepError& e) {
    err << "error: solver failed at " << e.what() << "\n";
    return kSolver;
  } catch (const RootFindingFailure& e) {
    err << "error: solver failed: " << e.what() << "\n";
    return kSolver;
  } catch (const NoConvergence& e) {
    err << "error: solver failed: " << e.what() << "\n";
    return kSolver;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: solver failed: " << e.what() << "\n";
    return kSolver;
  }
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const io::ProblemSpec spec = io::read_problem(a.spec);
  if (!(a.budget > 0.0)) throw io::ParseError("--budget must be > 0");
  const SolveResult r = solve(spec.triangle, a.budget);
  const double penalty = spec.penalty.value_or(default_penalty(spec.triangle));
  io::write_file(a.out, io::solution_document(a.budget, r, penalty));
  if (!a.image.empty()) {
    io::write_file(a.image, svg::render_network(r.network, r.phase.tag() + "  L=" +
                                                               io::format_real(a.budget)));
  }
  out << r.phase.tag() << " j=" << io::format_real(evaluate(r.network, penalty).j) << "\n";
  return kOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const io::ProblemSpec spec = io::read_problem(a.spec);
  if (!(a.from > 0.0) || !(a.from < a.to)) {
    throw io::ParseError("--from must be positive and below --to");
  }
  if (a.samples < 2) throw io::ParseError("--samples must be at least 2");
  const EvolutionTrace trace = sweep(spec.triangle, a.from, a.to, a.samples);
  io::write_file(a.out, io::sweep_table(trace));
  if (!a.curve_image.empty()) io::write_file(a.curve_image, svg::render_curve(trace));
  out << trace.samples.size() << " samples written\n";
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const io::ProblemSpec spec = io::read_problem(a.spec);
  if (a.budgets.empty()) throw io::ParseError("--budgets needs at least one value");
  for (double b : a.budgets) {
    if (!(b > 0.0)) throw io::ParseError("budgets must be > 0");
  }
  const Thresholds th = thresholds(spec.triangle);
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %-20s %-20s %-11s %-13s %-13s %-5s %s\n", "budget",
                "j_analytic", "j_oracle", "gap", "analytic", "oracle", "agree", "ok");
  out << line;
  bool all_ok = true;
  for (double b : a.budgets) {
    const SolveResult ar = solve(spec.triangle, b, th);
    const oracle::OracleResult orc = oracle::solve(spec.triangle, b, a.seed);
    const double gap = orc.j - ar.objective.j;
    const bool ok = gap >= -kMaxUndercut && gap <= kMaxShortfall;
    all_ok = all_ok && ok;
    const std::string oracle_shape = phase_tag(structure_of(orc.best));
    const bool agree = oracle_shape == phase_tag(structure_of(ar.network));
    std::snprintf(line, sizeof line, "%-12.6f %-20.12f %-20.12f %-11.2e %-13s %-13s %-5s %s\n", b,
                  ar.objective.j, orc.j, gap, ar.phase.tag().c_str(), oracle_shape.c_str(),
                  agree ? "yes" : "no", ok ? "ok" : "FAIL");
    out << line;
  }
  if (!all_ok) {
    out << "verification failed: gap outside [-1e-06, 0.001]\n";
    return kVerificationGap;
  }
  out << "verification passed\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Budget-constrained Steiner networks over three terminals"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Optimal network for one budget");
  solve_cmd->add_option("--spec", solve_args.spec, "Problem file")->required();
  solve_cmd->add_option("--budget", solve_args.budget, "Length budget L")->required();
  solve_cmd->add_option("--out", solve_args.out, "Solution file to write")->required();
  solve_cmd->add_option("--image", solve_args.image, "Optional SVG of the network");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "J(L) over a budget range");
  sweep_cmd->add_option("--spec", sweep_args.spec, "Problem file")->required();
  sweep_cmd->add_option("--from", sweep_args.from, "First budget")->required();
  sweep_cmd->add_option("--to", sweep_args.to, "Last budget")->required();
  sweep_cmd->add_option("--samples", sweep_args.samples, "Evenly spaced samples")->required();
  sweep_cmd->add_option("--out", sweep_args.out, "CSV table to write")->required();
  sweep_cmd->add_option("--curve-image", sweep_args.curve_image, "Optional SVG of J(L)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check against the numerical oracle");
  verify_cmd->add_option("--spec", verify_args.spec, "Problem file")->required();
  verify_cmd->add_option("--budgets", verify_args.budgets, "Comma-separated budgets")
      ->required()
      ->delimiter(',');
  verify_cmd->add_option("--seed", verify_args.seed, "Oracle restart seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*solve_cmd) return guarded(err, [&] { return cmd_solve(solve_args, out); });
  if (*sweep_cmd) return guarded(err, [&] { return cmd_sweep(sweep_args, out); });
  return guarded(err, [&] { return cmd_verify(verify_args, out); });
}

}  // namespace tristeiner::cli
