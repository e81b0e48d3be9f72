#include <doctest.h>

#include <cmath>

#include "landscape/montecarlo.hpp"
#include "landscape/verify.hpp"

using namespace landscape;

TEST_CASE("random compositions partition n") {
  RandomStream stream(113);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 12;
    const auto parts = random_composition(n, stream);
    int total = 0;
    for (int p : parts) {
      CHECK(p >= 1);
      total += p;
    }
    CHECK(total == n);
  }
}

TEST_CASE("descending value draws respect the minimum gap") {
  RandomStream stream(127);
  for (int count : {1, 2, 5, 12}) {
    const auto v = random_descending_values(count, stream);
    CHECK(static_cast<int>(v.size()) == count);
    for (int i = 0; i + 1 < count; ++i) CHECK(v[i] - v[i + 1] >= 1e-3);
    for (double x : v) {
      CHECK(x >= 0.0);
      CHECK(x <= 1.0);
    }
  }
  // Large counts exercise the gap-padding fallback.
  const auto wide = random_descending_values(120, stream);
  for (size_t i = 0; i + 1 < wide.size(); ++i) CHECK(wide[i] - wide[i + 1] >= 1e-3);
  CHECK_THROWS_AS(random_descending_values(2000, stream), InvalidInput);
}

TEST_CASE("random landscapes have workable structure") {
  RandomStream stream(131);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 10;
    const LandscapeSpec spec = random_landscape_spec(n, stream);
    CHECK(spec.dim() == n);
    CHECK(spec.rho_block_count() >= 2);
    CHECK(spec.obs_block_count() >= 2);
    const ContingencyTable table = random_table(spec, stream);
    CHECK_NOTHROW(validate_table(spec, table));
    CHECK(build_submanifold(spec, table).spectrum.beta_min > 0);
  }
}

TEST_CASE("conjecture trials hold on small random landscapes") {
  for (int n : {4, 6}) {
    CampaignConfig config;
    config.trials = 60;
    config.seed = 2024 + n;
    config.dims = {n};
    config.threads = 2;
    const CampaignResult result = conjecture_campaign(config);
    CHECK(result.trials == 60);
    CHECK(result.failures == 0);
    CHECK(result.min_slack >= tol::kSlackFloor);
  }
}

TEST_CASE("campaign records are pure functions of (seed, trial)") {
  CampaignConfig config;
  config.trials = 16;
  config.seed = 77;
  config.dims = {4, 6};
  std::vector<ConjectureTrialRecord> records;
  conjecture_campaign(config, [&](const ConjectureTrialRecord& r) {
    records.push_back(r);
  });
  REQUIRE(records.size() == 16);
  for (const auto& r : records) {
    CHECK(r.seed == config.seed);
    const ConjectureTrialRecord replay = run_campaign_trial(config, r.trial_index);
    CHECK(replay.stream_id == r.stream_id);
    CHECK(replay.spec_summary == r.spec_summary);
    CHECK(replay.table_key == r.table_key);
    CHECK(replay.min_slack == r.min_slack);
    CHECK(replay.coefficients == r.coefficients);
    CHECK((r.n == 4 || r.n == 6));
  }
}

TEST_CASE("failing trials are reproducible from their stream ids") {
  CampaignConfig config;
  config.trials = 8;
  config.seed = 99;
  config.dims = {4};
  // An impossible floor forces every trial to fail, standing in for a
  // genuine violation.
  config.slack_floor = 1e9;
  const CampaignResult result = conjecture_campaign(config);
  REQUIRE(result.failures == 8);
  for (const auto& rec : result.failing) {
    CHECK(rec.seed == config.seed);
    CHECK(rec.stream_id == rec.trial_index);
    const ConjectureTrialRecord replay = run_campaign_trial(config, rec.trial_index);
    CHECK(replay.min_slack == rec.min_slack);
    CHECK(replay.coefficients == rec.coefficients);
  }
}

TEST_CASE("fixed-spec campaigns draw random tables of that landscape") {
  CampaignConfig config;
  config.trials = 12;
  config.seed = 5;
  config.fixed_spec = rank_one_spec(5);
  std::vector<std::string> specs;
  const CampaignResult result = conjecture_campaign(config, [&](const auto& r) {
    specs.push_back(r.spec_summary);
  });
  CHECK(result.failures == 0);
  for (const auto& s : specs) CHECK(s == rank_one_spec(5).summary());
}

TEST_CASE("inverted tolerance detects the equality case") {
  // With the floor moved to +1e-3, the tight single-eigenvector geodesic
  // must register as a violation; this proves the harness can see one.
  const LandscapeSpec spec = rank_one_spec(4);
  const ContingencyTable table = rank_one_max_table(4);
  RandomStream stream(151);
  const CriticalPoint point = random_critical_point(spec, table, stream);
  const auto vectors = nonzero_hessian_eigenvectors(spec, point.pairing);
  const SkewHermitianMatrix a = assemble_normal_direction(point, {vectors[0]}, {1.0});
  const auto grid = uniform_grid(0.0, M_PI / (2 * std::sqrt(2.0)), 200);
  const auto f = f_along_normal(spec, point, a, grid);
  double min_slack = f[0];
  for (size_t i = 0; i < grid.size(); ++i) {
    min_slack = std::min(min_slack, f[i] - conjecture_floor(1.0, grid[i]));
  }
  CHECK(min_slack >= tol::kSlackFloor);   // honest tolerance: passes
  CHECK(std::abs(min_slack) <= 1e-8);     // equality case: slack is zero
  CHECK_FALSE(min_slack >= 1e-3);         // inverted tolerance: detected
}

TEST_CASE("empirical fraction matches the N=2 analytic value") {
  const LandscapeSpec spec = rank_one_spec(2);
  const double eps = 0.2;
  const std::uint64_t trials = 200000;
  const EmpiricalEstimate est = empirical_volfrac(spec, eps, trials, 1234, 2);
  const double analytic = 1.0 - std::sqrt(1.0 - 2.0 * eps * eps);
  const double sigma = std::sqrt(analytic * (1 - analytic) / trials);
  CHECK(std::abs(est.fraction - analytic) <= 4 * sigma);
  CHECK(est.ci_low <= est.fraction);
  CHECK(est.fraction <= est.ci_high);
}

TEST_CASE("empirical fraction tracks the summed tube estimate at eps=0.1") {
  // Sum of the two N=2 estimates is eps^2; the true fraction carries an
  // O(eps^2) relative correction of about eps^2/2.
  const LandscapeSpec spec = rank_one_spec(2);
  const double eps = 0.1;
  const EmpiricalEstimate est = empirical_volfrac(spec, eps, 1000000, 4321, 2);
  const double ratio = est.fraction / (eps * eps);
  CHECK(ratio >= 0.98);
  CHECK(ratio <= 1.06);
}

TEST_CASE("empirical fraction edge thresholds") {
  const LandscapeSpec spec = rank_one_spec(2);
  // ||[U†OU, rho]|| <= 2 ||O|| ||rho||; beyond that everything is a hit.
  CHECK(empirical_volfrac(spec, 2.0, 2000, 7, 1).fraction == 1.0);
  // The critical set has measure zero.
  CHECK(empirical_volfrac(spec, 0.0, 2000, 7, 1).fraction == 0.0);
  CHECK_THROWS_AS(empirical_volfrac(spec, 0.1, 0, 7, 1), InvalidInput);
}

TEST_CASE("wilson interval brackets the point estimate") {
  for (std::uint64_t hits : {std::uint64_t(0), std::uint64_t(7), std::uint64_t(100)}) {
    const EmpiricalEstimate est = wilson_interval(hits, 100, 0.1);
    CHECK(est.ci_low <= est.fraction + 1e-15);
    CHECK(est.fraction <= est.ci_high + 1e-15);
    CHECK(est.ci_low >= 0.0);
    CHECK(est.ci_high <= 1.0);
  }
}

TEST_CASE("spectrum sign flip would be caught by the oracle comparison") {
  // Mutation sanity for the spectrum checks: negating beta must break the
  // closed-form comparison the tests rely on.
  const LandscapeSpec spec({0.7, 0.3}, {1, 1}, {0.6, 0.4}, {1, 1});
  std::vector<int> identity = {0, 1};
  const auto sub = build_submanifold(spec, table_from_permutation(spec, identity));
  REQUIRE(sub.spectrum.lines.size() == 1);
  const double beta = sub.spectrum.lines[0].beta;
  CHECK(std::abs(beta - (-0.08)) <= 1e-15);
  CHECK_FALSE(std::abs(-beta - (-0.08)) <= 1e-15);
}
