#pragma once

#include <iosfwd>

namespace tristeiner::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kGeometry = 2,
  kSolver = 3,
  kVerificationGap = 4,
};

/// Entry point behind the `tristeiner` executable:
///   solve  --spec FILE --budget L --out FILE [--image FILE]
///   sweep  --spec FILE --from L --to L --samples N --out FILE [--curve-image FILE]
///   verify --spec FILE --budgets L1,L2,... [--seed N]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tristeiner::cli
