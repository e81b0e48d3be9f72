#pragma once

#include <functional>
#include <optional>

#include "landscape/parallel.hpp"
#include "landscape/submanifolds.hpp"

namespace landscape {

// Uniform composition of n (each of the 2^{n-1} ordered partitions equally
// likely); the parts become eigenvalue multiplicities.
std::vector<int> random_composition(int n, RandomStream& stream);

// Distinct values uniform in [0, 1], sorted descending, with a minimum gap
// enforced.  Resampling is tried first; when the part count makes rejection
// hopeless the sorted sample is spread by deterministic gap padding instead,
// so the draw always terminates.  Requires (count-1) * min_gap < 1.
std::vector<double> random_descending_values(int count, RandomStream& stream,
                                             double min_gap = 1e-3);

// Random degeneracy structure and eigenvalues for dimension n.  Structures
// with a scalar rho or O (which make J constant) are redrawn.
LandscapeSpec random_landscape_spec(int n, RandomStream& stream,
                                    double min_gap = 1e-3);

// Table of a uniformly random pairing permutation.
ContingencyTable random_table(const LandscapeSpec& spec, RandomStream& stream);

// One randomized test of the geodesic lower bound: a Haar point on the
// submanifold, a Gaussian unit normal direction A over the nonzero-eigenvalue
// eigenvectors, f sampled on a uniform grid over [0, pi/(2 sqrt2)] and
// compared against beta_min² sin²(sqrt2 s)/2.
struct ConjectureTrialRecord {
  std::uint64_t seed = 0;        // trial stream; replays every draw below
  std::uint64_t stream_id = 0;
  std::uint64_t trial_index = 0;
  int n = 0;                     // landscape dimension of the trial
  std::string spec_summary;
  std::string table_key;
  int grid_points = 0;
  double beta_min = 0;
  double min_slack = 0;          // min over the grid of f(s) - floor(s)
  bool pass = false;             // min_slack >= slack_floor
  std::vector<double> coefficients;  // Gaussian draws before normalization
};

ConjectureTrialRecord conjecture_trial(const LandscapeSpec& spec,
                                       const ContingencyTable& table,
                                       const RandomStream& stream,
                                       int grid_points = 200,
                                       double slack_floor = tol::kSlackFloor);

struct CampaignConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::vector<int> dims = {4, 6, 8, 12};  // N drawn uniformly from these
  int grid_points = 200;
  double slack_floor = tol::kSlackFloor;
  double min_gap = 1e-3;
  unsigned threads = 1;
  // When set, every trial uses this landscape with a random table instead
  // of drawing a random degeneracy structure; dims is ignored.
  std::optional<LandscapeSpec> fixed_spec;
};

struct CampaignResult {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double min_slack = 0;
  std::vector<ConjectureTrialRecord> failing;  // ordered by trial index
};

// Runs `trials` independent trials; trial i is a pure function of
// (seed, i), so the result does not depend on the worker count.  The sink,
// when provided, receives every record in trial-index order.
CampaignResult conjecture_campaign(
    const CampaignConfig& config,
    const std::function<void(const ConjectureTrialRecord&)>& sink = {});

// Replays one campaign trial.  A record's (seed, stream_id) is exactly
// (config.seed, trial_index), so any logged trial can be regenerated.
ConjectureTrialRecord run_campaign_trial(const CampaignConfig& config,
                                         std::uint64_t trial_index);

// Haar-sampled estimate of the near-critical volume fraction
// VolFrac{ U : ||grad J(U)|| <= eps } with a 95% Wilson interval.
struct EmpiricalEstimate {
  double epsilon = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double fraction = 0;
  double ci_low = 0;
  double ci_high = 0;
};

EmpiricalEstimate empirical_volfrac(const LandscapeSpec& spec, double eps,
                                    std::uint64_t trials, std::uint64_t seed,
                                    unsigned threads = 1);

EmpiricalEstimate wilson_interval(std::uint64_t hits, std::uint64_t trials,
                                  double eps);

}  // namespace landscape
