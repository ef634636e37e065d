#pragma once

#include <string>

#include "tristeiner/evolve.hpp"
#include "tristeiner/network.hpp"

namespace tristeiner::svg {

/// Terminals as black dots, anchors as red dots, edges as solid lines over
/// a dashed outline of the terminal triangle.
std::string render_network(const Network& n, const std::string& caption = {});

/// J(L) polyline over the connected range of the trace, with a dashed
/// marker at each threshold budget.
std::string render_curve(const EvolutionTrace& trace);

}  // namespace tristeiner::svg
