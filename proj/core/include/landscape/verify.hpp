#pragma once

#include <iosfwd>

#include "landscape/montecarlo.hpp"

namespace landscape {

// Built-in consistency suite.  Each check covers one acceptance criterion
// of the project: closed-form volume identities, oracle comparisons for the
// gradient and Hessian, tube estimates against analytic and sampled
// fractions, curvature structure, embedding asymptotics, the geodesic
// lower-bound campaign, and cross-thread determinism.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;   // stable text: counts and worst residuals, no timing
  double seconds = 0;
};

struct VerifyOptions {
  bool quick = false;       // reduced trial counts, < 1 minute
  unsigned threads = 1;
  std::uint64_t seed = 20240801;
};

CheckResult check_volume_quotient(const VerifyOptions& opts);
CheckResult check_worked_volume_formulas(const VerifyOptions& opts);
CheckResult check_gradient_hessian(const VerifyOptions& opts);
CheckResult check_volfrac_consistency(const VerifyOptions& opts);
CheckResult check_tube_bound_dominance(const VerifyOptions& opts);
CheckResult check_curvature(const VerifyOptions& opts);
CheckResult check_asymptotics(const VerifyOptions& opts);
CheckResult check_conjecture_harness(const VerifyOptions& opts);
CheckResult check_determinism(const VerifyOptions& opts);

// Runs all checks in criterion order.  Stable result lines go to `out`
// (one "PASS name -- detail" / "FAIL ..." line per check); timing and
// progress go to `progress` when non-null.
std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          std::ostream& out,
                                          std::ostream* progress = nullptr);

// Convenience landscape builders shared by the suite and the tests.
LandscapeSpec rank_one_spec(int n);
ContingencyTable rank_one_max_table(int n);
ContingencyTable rank_one_min_table(int n);
LandscapeSpec nondegenerate_spec(int n);

}  // namespace landscape
