#include "landscape/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace landscape {

std::vector<int> random_composition(int n, RandomStream& stream) {
  if (n < 1) throw InvalidInput("random_composition: n must be positive");
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (stream.next_u64() & 1) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return parts;
}

std::vector<double> random_descending_values(int count, RandomStream& stream,
                                             double min_gap) {
  if (count < 1) throw InvalidInput("random_descending_values: count must be positive");
  if ((count - 1) * min_gap >= 1.0) {
    throw InvalidInput("random_descending_values: gap too wide for [0,1]");
  }
  auto draw_sorted = [&]() {
    std::vector<double> v(count);
    for (double& x : v) x = stream.uniform01();
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
  };
  auto min_spacing = [](const std::vector<double>& v) {
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < v.size(); ++i) gap = std::min(gap, v[i] - v[i + 1]);
    return gap;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> v = draw_sorted();
    if (count == 1 || min_spacing(v) >= min_gap) return v;
  }
  // Rejection is hopeless for large counts; spread the sample instead.
  std::vector<double> v = draw_sorted();
  const double scale = 1.0 - (count - 1) * min_gap;
  for (int i = 0; i < count; ++i) {
    v[i] = v[i] * scale + (count - 1 - i) * min_gap;
  }
  return v;
}

LandscapeSpec random_landscape_spec(int n, RandomStream& stream, double min_gap) {
  if (n < 2) throw InvalidInput("random_landscape_spec: n must be at least 2");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> rho_mults = random_composition(n, stream);
    std::vector<int> obs_mults = random_composition(n, stream);
    // A scalar rho or O makes J constant; those structures carry no
    // critical-set geometry.
    if (rho_mults.size() < 2 || obs_mults.size() < 2) continue;
    std::vector<double> rho_vals =
        random_descending_values(static_cast<int>(rho_mults.size()), stream, min_gap);
    std::vector<double> obs_vals =
        random_descending_values(static_cast<int>(obs_mults.size()), stream, min_gap);
    return LandscapeSpec(std::move(rho_vals), std::move(rho_mults),
                         std::move(obs_vals), std::move(obs_mults));
  }
  throw NumericalFailure("random_landscape_spec: structure sampling did not converge");
}

ContingencyTable random_table(const LandscapeSpec& spec, RandomStream& stream) {
  const int n = spec.dim();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(stream.uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return table_from_permutation(spec, perm);
}

ConjectureTrialRecord conjecture_trial(const LandscapeSpec& spec,
                                       const ContingencyTable& table,
                                       const RandomStream& stream,
                                       int grid_points, double slack_floor) {
  if (grid_points < 2) throw InvalidInput("conjecture_trial: need at least two grid points");
  RandomStream point_stream = stream.substream(0);
  RandomStream coeff_stream = stream.substream(1);

  const CriticalPoint point = random_critical_point(spec, table, point_stream);
  const std::vector<HessianEigenvector> vectors =
      nonzero_hessian_eigenvectors(spec, point.pairing);
  if (vectors.empty()) {
    throw InvalidInput("conjecture_trial: all Hessian eigenvalues vanish "
                       "(constant landscape)");
  }
  double beta_min = std::numeric_limits<double>::infinity();
  for (const auto& v : vectors) beta_min = std::min(beta_min, std::abs(v.beta));

  std::vector<double> coeffs(vectors.size());
  double norm2 = 0;
  do {
    norm2 = 0;
    for (double& c : coeffs) {
      c = coeff_stream.normal();
      norm2 += c * c;
    }
  } while (norm2 == 0);
  std::vector<double> unit_coeffs(coeffs);
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (double& c : unit_coeffs) c *= inv_norm;

  const SkewHermitianMatrix direction =
      assemble_normal_direction(point, vectors, unit_coeffs);
  const std::vector<double> grid =
      uniform_grid(0.0, M_PI / (2.0 * std::sqrt(2.0)), grid_points);
  const std::vector<double> f = f_along_normal(spec, point, direction, grid);

  double min_slack = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < grid.size(); ++i) {
    min_slack = std::min(min_slack, f[i] - conjecture_floor(beta_min, grid[i]));
  }

  ConjectureTrialRecord record;
  record.seed = stream.seed();
  record.stream_id = stream.stream_id();
  record.n = spec.dim();
  record.spec_summary = spec.summary();
  record.table_key = table.key();
  record.grid_points = grid_points;
  record.beta_min = beta_min;
  record.min_slack = min_slack;
  record.pass = min_slack >= slack_floor;
  record.coefficients = std::move(coeffs);
  return record;
}

ConjectureTrialRecord run_campaign_trial(const CampaignConfig& config,
                                         std::uint64_t trial_index) {
  const RandomStream trial_stream(config.seed, trial_index);
  RandomStream setup = trial_stream.substream(2);
  std::optional<LandscapeSpec> drawn;
  if (!config.fixed_spec) {
    const int n = config.dims[setup.uniform_below(config.dims.size())];
    drawn = random_landscape_spec(n, setup, config.min_gap);
  }
  const LandscapeSpec& spec = config.fixed_spec ? *config.fixed_spec : *drawn;
  const ContingencyTable table = random_table(spec, setup);
  ConjectureTrialRecord record = conjecture_trial(spec, table, trial_stream,
                                                  config.grid_points,
                                                  config.slack_floor);
  record.trial_index = trial_index;
  return record;
}

CampaignResult conjecture_campaign(
    const CampaignConfig& config,
    const std::function<void(const ConjectureTrialRecord&)>& sink) {
  if (config.trials < 1) throw InvalidInput("conjecture_campaign: trials must be positive");
  if (config.dims.empty()) throw InvalidInput("conjecture_campaign: empty dims");

  CampaignResult result;
  result.min_slack = std::numeric_limits<double>::infinity();

  // Records hold one coefficient per normal direction (up to ~N² doubles),
  // so the in-flight batch is kept small.
  const std::uint64_t chunk = 128;
  std::vector<ConjectureTrialRecord> batch;
  for (std::uint64_t base = 0; base < config.trials; base += chunk) {
    const std::uint64_t batch_size = std::min(chunk, config.trials - base);
    batch.assign(batch_size, {});
    parallel_for_index(batch_size, config.threads, [&](std::uint64_t i) {
      batch[i] = run_campaign_trial(config, base + i);
    });
    for (auto& record : batch) {
      if (sink) sink(record);
      ++result.trials;
      result.min_slack = std::min(result.min_slack, record.min_slack);
      if (!record.pass) {
        ++result.failures;
        result.failing.push_back(std::move(record));
      }
    }
  }
  return result;
}

EmpiricalEstimate empirical_volfrac(const LandscapeSpec& spec, double eps,
                                    std::uint64_t trials, std::uint64_t seed,
                                    unsigned threads) {
  if (!(eps >= 0)) throw InvalidInput("empirical_volfrac: eps must be nonnegative");
  if (trials < 1) throw InvalidInput("empirical_volfrac: trials must be positive");
  const int n = spec.dim();
  std::atomic<std::uint64_t> hits{0};
  parallel_for_index(trials, threads, [&](std::uint64_t i) {
    RandomStream stream(seed, i);
    const UnitaryMatrix u = haar_unitary(n, stream);
    if (grad_norm(spec, u) <= eps) hits.fetch_add(1, std::memory_order_relaxed);
  });
  return wilson_interval(hits.load(), trials, eps);
}

EmpiricalEstimate wilson_interval(std::uint64_t hits, std::uint64_t trials,
                                  double eps) {
  if (trials < 1) throw InvalidInput("wilson_interval: trials must be positive");
  constexpr double z = 1.959963984540054;  // 95%
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2n = z * z / n;
  const double center = (p + 0.5 * z2n) / (1.0 + z2n);
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / (1.0 + z2n);
  EmpiricalEstimate est;
  est.epsilon = eps;
  est.trials = trials;
  est.hits = hits;
  est.fraction = p;
  est.ci_low = std::max(0.0, center - half);
  est.ci_high = std::min(1.0, center + half);
  return est;
}

}  // namespace landscape
