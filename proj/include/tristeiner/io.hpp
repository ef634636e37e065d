#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "tristeiner/analytic.hpp"
#include "tristeiner/evolve.hpp"

namespace tristeiner::io {

/// Malformed or unreadable input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem file: {"terminals": [[x, y], [x, y], [x, y]], "budget": L,
/// "penalty": M}; budget and penalty are optional.
struct ProblemSpec {
  TerminalTriangle triangle;
  std::optional<double> budget;
  std::optional<double> penalty;
};

/// Throws ParseError on malformed text and DegenerateGeometry on a
/// coincident or collinear terminal set.
ProblemSpec parse_problem(const std::string& text);
ProblemSpec read_problem(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Fixed 17-significant-digit text; reads back to the same double.
std::string format_real(double v);

/// Solution document for a solve: phase, budget use, objective, slope and
/// the network's nodes and edges.
std::string solution_document(double budget, const SolveResult& result, double penalty);

/// A solution document read back in.
struct StoredSolution {
  Network network;
  double budget = 0.0;
  double penalty = 0.0;
  std::string phase;
  double l_used = 0.0;
  double j = 0.0;
  double slope = 0.0;
};
StoredSolution parse_solution(const std::string& text);

/// Comma-separated l,j,phase,slope table with a header row.
std::string sweep_table(const EvolutionTrace& trace);

}  // namespace tristeiner::io
