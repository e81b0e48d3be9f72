#include "landscape/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "landscape/asymptotics.hpp"
#include "landscape/cli.hpp"
#include "landscape/curvature.hpp"
#include "landscape/volumes.hpp"

namespace landscape {

namespace {

std::string fmt(double v, const char* f = "%.3g") {
  char buf[48];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// Accumulates failures; detail keeps the worst residuals seen so the PASS
// line documents the margins.
struct Checker {
  bool ok = true;
  std::string failures;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!failures.empty()) failures += "; ";
    if (failures.size() < 600) failures += what;
  }
};

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

CheckResult finish(const char* name, double start, const Checker& c,
                   const std::string& pass_detail) {
  return {name, c.ok, c.ok ? pass_detail : c.failures, now_seconds() - start};
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  return out;
}

// Spec with the given multiplicities and synthetic well-separated values.
LandscapeSpec spec_from_mults(const std::vector<int>& rho_mults,
                              const std::vector<int>& obs_mults) {
  std::vector<double> rv(rho_mults.size()), ov(obs_mults.size());
  for (size_t i = 0; i < rv.size(); ++i) rv[i] = static_cast<double>(rv.size() - i);
  for (size_t j = 0; j < ov.size(); ++j) ov[j] = static_cast<double>(ov.size() - j);
  return LandscapeSpec(std::move(rv), std::vector<int>(rho_mults),
                       std::move(ov), std::vector<int>(obs_mults));
}

double analytic_rank1_n2_fraction(double eps) {
  return 1.0 - std::sqrt(1.0 - 2.0 * eps * eps);
}

}  // namespace

LandscapeSpec rank_one_spec(int n) {
  return LandscapeSpec({1.0, 0.0}, {1, n - 1}, {1.0, 0.0}, {1, n - 1});
}

ContingencyTable rank_one_max_table(int n) {
  return ContingencyTable::from_rows({{1, 0}, {0, n - 1}});
}

ContingencyTable rank_one_min_table(int n) {
  return ContingencyTable::from_rows({{0, 1}, {1, n - 2}});
}

LandscapeSpec nondegenerate_spec(int n) {
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = static_cast<double>(n - i) / n;
  return LandscapeSpec(vals, std::vector<int>(n, 1), vals, std::vector<int>(n, 1));
}

CheckResult check_volume_quotient(const VerifyOptions& opts) {
  const double start = now_seconds();
  Checker c;
  RandomStream stream(opts.seed, 101);

  const int spec_count = opts.quick ? 10 : 50;
  const std::uint64_t guard = 100000;
  std::uint64_t tables = 0;
  int skipped = 0;
  double worst_quotient = 0;
  for (int s = 0; s < spec_count; ++s) {
    LandscapeSpec spec = random_landscape_spec(
        2 + static_cast<int>(stream.uniform_below(9)), stream);
    std::vector<ContingencyTable> specTables;
    try {
      specTables = all_tables(spec, guard);
    } catch (const GuardExceeded&) {
      ++skipped;
      --s;
      continue;
    }
    std::vector<int> mn(spec.obs_mults());
    mn.insert(mn.end(), spec.rho_mults().begin(), spec.rho_mults().end());
    const LogVolume whole = vol_unitary_product(mn);
    for (const ContingencyTable& table : specTables) {
      ++tables;
      const CriticalSubmanifold sub = build_submanifold(spec, table);
      std::vector<int> k_entries;
      for (int i = 0; i < table.rows(); ++i) {
        for (int j = 0; j < table.cols(); ++j) {
          if (table.at(i, j) > 0) k_entries.push_back(table.at(i, j));
        }
      }
      const LogVolume lhs = vol_orbit(spec, sub) * vol_unitary_product(k_entries);
      const LogVolume ratio = lhs / whole;
      c.require(ratio.two_pi_numerator() == 0,
                "quotient 2pi exponent mismatch for table " + table.key());
      const double err = std::abs(ratio.residual_log());
      worst_quotient = std::max(worst_quotient, err);
      c.require(err <= 1e-12, "quotient log residual " + fmt(err) + " for " +
                                  spec.summary() + " table " + table.key());
    }
  }

  const int mac_count = opts.quick ? 50 : 200;
  RandomStream mac_stream(opts.seed, 102);
  double worst_mac = 0;
  for (int t = 0; t < mac_count; ++t) {
    const int parts = 1 + static_cast<int>(mac_stream.uniform_below(6));
    std::vector<int> mults(parts);
    for (int& a : mults) {
      a = 1 + static_cast<int>(mac_stream.uniform_below(256 / parts));
    }
    const LogVolume closed = vol_unitary_product(mults);
    LogVolume sphere_route = chevalley_cell_volume(mults);
    for (int a : mults) {
      for (int s = 0; s < a; ++s) sphere_route *= vol_odd_sphere(s);
    }
    const LogVolume ratio = closed / sphere_route;
    c.require(ratio.two_pi_numerator() == 0, "macdonald 2pi exponent mismatch");
    const double err = std::abs(ratio.residual_log());
    worst_mac = std::max(worst_mac, err);
    c.require(err <= 1e-10, "macdonald log residual " + fmt(err));
  }

  return finish("volume-quotient", start, c,
                std::to_string(spec_count) + " specs / " + std::to_string(tables) +
                    " tables (skipped " + std::to_string(skipped) +
                    " oversized), worst quotient residual " + fmt(worst_quotient) +
                    "; macdonald x" + std::to_string(mac_count) + " worst " +
                    fmt(worst_mac));
}

CheckResult check_worked_volume_formulas(const VerifyOptions& opts) {
  const double start = now_seconds();
  Checker c;
  double worst = 0;
  for (int n = 2; n <= 8; ++n) {
    const LandscapeSpec spec = rank_one_spec(n);

    const CriticalSubmanifold max_sub = build_submanifold(spec, rank_one_max_table(n));
    const LogVolume max_vol = vol_orbit(spec, max_sub);
    c.require(max_vol.two_pi_numerator() == static_cast<std::int64_t>(n) * n - n + 2,
              "rank-1 max exponent N=" + std::to_string(n));
    double err = std::abs(max_vol.residual_log() + log_superfactorial(n - 1));
    worst = std::max(worst, err);
    c.require(err <= 1e-12, "rank-1 max residual N=" + std::to_string(n));

    const CriticalSubmanifold min_sub = build_submanifold(spec, rank_one_min_table(n));
    const LogVolume min_vol = vol_orbit(spec, min_sub);
    c.require(min_vol.two_pi_numerator() == static_cast<std::int64_t>(n) * n + n - 2,
              "rank-1 min exponent N=" + std::to_string(n));
    err = std::abs(min_vol.residual_log() + log_factorial(n - 2) +
                   log_superfactorial(n - 1));
    worst = std::max(worst, err);
    c.require(err <= 1e-12, "rank-1 min residual N=" + std::to_string(n));

    const LandscapeSpec torus = nondegenerate_spec(n);
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    RandomStream perm_stream(opts.seed, 200 + n);
    for (const auto& table :
         {table_from_permutation(torus, identity), random_table(torus, perm_stream)}) {
      const LogVolume vol = vol_orbit(torus, build_submanifold(torus, table));
      c.require(vol.two_pi_numerator() == 2 * static_cast<std::int64_t>(n),
                "torus exponent N=" + std::to_string(n));
      c.require(vol.residual_log() == 0.0, "torus residual must be exactly zero");
    }
  }
  return finish("worked-volume-formulas", start, c,
                "rank-1 max/min and tori match closed forms for N=2..8, worst "
                "residual " + fmt(worst));
}

CheckResult check_gradient_hessian(const VerifyOptions& opts) {
  const double start = now_seconds();
  Checker c;
  const int points = opts.quick ? 20 : 100;

  // Finite-difference oracle for the gradient at random points.
  RandomStream grad_stream(opts.seed, 301);
  double worst_grad = 0;
  for (int t = 0; t < points; ++t) {
    const int n = 2 + t % 7;
    const LandscapeSpec spec = random_landscape_spec(n, grad_stream);
    const UnitaryMatrix u = haar_unitary(n, grad_stream);
    const SkewHermitianMatrix x = random_skew(n, grad_stream);
    const double directional = hs_inner(grad_J(spec, u), u * x);
    const double h = 1e-5;
    const double fd = (eval_J(spec, u * expm_skew(h * x)) -
                       eval_J(spec, u * expm_skew(-h * x))) /
                      (2 * h);
    const double rel = std::abs(directional - fd) / std::max(std::abs(directional), 1e-6);
    worst_grad = std::max(worst_grad, rel);
    c.require(rel <= 1e-5, "gradient fd mismatch rel " + fmt(rel));
  }

  // Constructed critical points and the Hessian eigenvalue oracle.
  RandomStream crit_stream(opts.seed, 302);
  double worst_grad_norm = 0, worst_beta = 0;
  for (int t = 0; t < points; ++t) {
    const int n = 2 + t % 7;
    const LandscapeSpec spec = random_landscape_spec(n, crit_stream);
    const ContingencyTable table = random_table(spec, crit_stream);
    const CriticalPoint point = random_critical_point(spec, table, crit_stream);
    const double g = grad_norm(spec, point.u);
    worst_grad_norm = std::max(worst_grad_norm, g);
    c.require(g <= 1e-9, "constructed point gradient " + fmt(g));
    const double v = build_submanifold(spec, table).value;
    c.require(std::abs(eval_J(spec, point.u) - v) <= 1e-10,
              "critical value off by " + fmt(std::abs(eval_J(spec, point.u) - v)));

    const auto vectors = nonzero_hessian_eigenvectors(spec, point.pairing);
    const size_t stride = std::max<size_t>(1, vectors.size() / 8);
    for (size_t v = 0; v < vectors.size(); v += stride) {
      const ComplexMatrix x = from_tilde_frame(point, eigenvector_tilde(vectors[v], n));
      const double h = 1e-4;
      const double j0 = eval_J(spec, point.u);
      const double fd2 = (eval_J(spec, point.u * expm_skew(h * x)) - 2 * j0 +
                          eval_J(spec, point.u * expm_skew(-h * x))) /
                         (h * h);
      const double err =
          std::abs(fd2 - vectors[v].beta) / std::max(1.0, std::abs(vectors[v].beta));
      worst_beta = std::max(worst_beta, err);
      c.require(err <= 1e-4, "hessian eigenvalue fd mismatch " + fmt(err));
    }
  }

  // Codimension identity, exhaustive over all degeneracy structures.
  const int n_max = opts.quick ? 5 : 6;
  std::uint64_t tables = 0;
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& rho_mults : compositions(n)) {
      for (const auto& obs_mults : compositions(n)) {
        const LandscapeSpec spec = spec_from_mults(rho_mults, obs_mults);
        enumerate_tables(spec, [&](const ContingencyTable& table) {
          ++tables;
          const CriticalSubmanifold sub = build_submanifold(spec, table);
          long long pairs = 0;
          for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
              if (spec.rho_block_of(j) != spec.rho_block_of(k) &&
                  spec.obs_block_of(sub.pairing(j)) != spec.obs_block_of(sub.pairing(k))) {
                ++pairs;
              }
            }
          }
          c.require(sub.codim == 2 * pairs,
                    "codimension identity fails for " + spec.summary() + " table " +
                        table.key());
          c.require(sub.spectrum.nonzero_count() == sub.codim,
                    "spectrum count differs from codimension");
        }, 2'000'000);
      }
    }
  }

  return finish("gradient-hessian-oracles", start, c,
                std::to_string(points) + " fd gradient points (worst rel " +
                    fmt(worst_grad) + "), " + std::to_string(points) +
                    " critical points (worst ||grad|| " + fmt(worst_grad_norm) +
                    ", worst beta fd " + fmt(worst_beta) +
                    "), codim identity exact on " + std::to_string(tables) +
                    " tables (N<=" + std::to_string(n_max) + ")");
}

CheckResult check_volfrac_consistency(const VerifyOptions& opts) {
  const double start = now_seconds();
  Checker c;

  const LandscapeSpec spec = rank_one_spec(2);
  const auto subs = enumerate_submanifolds(spec);
  c.require(subs.size() == 2, "rank-1 N=2 must have two submanifolds");
  for (double eps : {0.2, 0.1, 0.05}) {
    double total = 0;
    for (const auto& sub : subs) {
      const VolFracEstimate est = volfrac_estimate(spec, sub);
      c.require(est.epsilon_power == 2, "rank-1 N=2 estimate power");
      total += est.evaluate(eps);
    }
    c.require(std::abs(total - eps * eps) <= 1e-15,
              "sum of N=2 estimates differs from eps^2 at eps=" + fmt(eps));
  }

  const double eps = 0.2;
  const std::uint64_t trials = opts.quick ? 200000 : 1000000;
  const EmpiricalEstimate emp =
      empirical_volfrac(spec, eps, trials, opts.seed + 400, opts.threads);
  const double analytic = analytic_rank1_n2_fraction(eps);
  const double sigma = std::sqrt(analytic * (1 - analytic) / trials);
  c.require(std::abs(emp.fraction - analytic) <= 3 * sigma,
            "empirical fraction " + fmt(emp.fraction, "%.6g") + " vs analytic " +
                fmt(analytic, "%.6g") + " beyond 3 sigma");

  const double ratio = (0.05 * 0.05) / analytic_rank1_n2_fraction(0.05);
  c.require(ratio >= 0.98 && ratio <= 1.0,
            "estimate/analytic ratio at eps=0.05 out of [0.98, 1]: " + fmt(ratio));

  return finish("volfrac-consistency", start, c,
                "sum = eps^2 exact; empirical " + fmt(emp.fraction, "%.5f") +
                    " vs analytic " + fmt(analytic, "%.5f") + " (" +
                    std::to_string(trials) + " draws); ratio(0.05) = " +
                    fmt(ratio, "%.5f"));
}

CheckResult check_tube_bound_dominance(const VerifyOptions& opts) {
  const double start = now_seconds();
  Checker c;
  RandomStream stream(opts.seed, 501);
  const int spec_count = opts.quick ? 5 : 20;
  std::uint64_t tables = 0;
  int equalities = 0;
  // The rank-1 family has every |beta| equal, so it exercises the equality
  // side of the dominance claim; random specs cover the strict side.
  std::vector<LandscapeSpec> specs;
  for (int n = 2; n <= 6; ++n) specs.push_back(rank_one_spec(n));
  for (int s = 0; s < spec_count; ++s) {
    specs.push_back(random_landscape_spec(
        2 + static_cast<int>(stream.uniform_below(7)), stream));
  }
  for (size_t s = 0; s < specs.size(); ++s) {
    const LandscapeSpec& spec = specs[s];
    std::vector<ContingencyTable> specTables;
    try {
      specTables = all_tables(spec, 20000);
    } catch (const GuardExceeded&) {
      continue;
    }
    for (const auto& table : specTables) {
      ++tables;
      const CriticalSubmanifold sub = build_submanifold(spec, table);
      const VolFracEstimate est = volfrac_estimate(spec, sub);
      const VolFracEstimate bound = spherical_tube_coefficient(spec, sub);
      const double log_gap = bound.coefficient.log_value() - est.coefficient.log_value();
      if (sub.spectrum.all_abs_equal()) {
        ++equalities;
        c.require(std::abs(log_gap) <= 1e-9,
                  "equal-spectrum case not an equality, gap " + fmt(log_gap));
      } else {
        c.require(log_gap > 0, "bound does not dominate, gap " + fmt(log_gap));
      }
      for (double eps : {0.05, 0.5, 2.0}) {
        c.require(bound.log_at(eps) >= est.log_at(eps) - 1e-9,
                  "bound below estimate at eps " + fmt(eps));
      }
    }
  }
  return finish("tube-bound-dominance", start, c,
                std::to_string(spec_count) + " specs / " + std::to_string(tables) +
                    " tables, " + std::to_string(equalities) +
                    " exact equalities (all |beta| equal)");
}

CheckResult check_curvature(const VerifyOptions& opts) {
  const double start = now_seconds();
  Checker c;
  RandomStream stream(opts.seed, 601);
  const int draws = opts.quick ? 10 : 50;
  double worst_trace = 0, worst_pair = 0, worst_block = 0, worst_mean = 0;
  for (int t = 0; t < draws; ++t) {
    const int n = 2 + t % 7;
    const LandscapeSpec spec = random_landscape_spec(n, stream);
    const ContingencyTable table = random_table(spec, stream);
    const CriticalSubmanifold sub = build_submanifold(spec, table);
    const CriticalPoint point = random_critical_point(spec, table, stream);
    const TangentBasis basis = tangent_basis(spec, sub, point);
    const ComplexMatrix z = random_unit_normal(point, basis, stream);
    const ShapeOperator op = shape_operator(spec, sub, point, z);

    worst_trace = std::max(worst_trace, op.trace_abs());
    c.require(op.trace_abs() <= 1e-12, "shape operator trace " + fmt(op.trace_abs()));

    const RealVector eig = op.eigenvalues();
    const int d = static_cast<int>(eig.size());
    for (int i = 0; i < d / 2 + 1 && i < d; ++i) {
      const double resid = std::abs(eig[i] + eig[d - 1 - i]);
      worst_pair = std::max(worst_pair, resid);
      c.require(resid <= 1e-10, "eigenvalue pairing residual " + fmt(resid));
    }
    worst_block = std::max(worst_block, op.off_block_residual());
    c.require(op.off_block_residual() <= 1e-10,
              "off-block residual " + fmt(op.off_block_residual()));

    const double mean = mean_curvature_norm(spec, sub, point);
    worst_mean = std::max(worst_mean, mean);
    c.require(mean <= 1e-10, "mean curvature " + fmt(mean));
  }

  // Rank-1 minimum: principal curvatures +-1/(2 sqrt2).
  for (int n : {4, 5}) {
    const LandscapeSpec spec = rank_one_spec(n);
    const ContingencyTable table = rank_one_min_table(n);
    const CriticalSubmanifold sub = build_submanifold(spec, table);
    RandomStream pt_stream(opts.seed, 620 + n);
    const CriticalPoint point = random_critical_point(spec, table, pt_stream);
    const TangentBasis basis = tangent_basis(spec, sub, point);
    c.require(static_cast<int>(basis.obs_only.size()) == 2 * n - 4 &&
                  static_cast<int>(basis.rho_only.size()) == 2 * n - 4,
              "rank-1 min category sizes N=" + std::to_string(n));
    const ComplexMatrix z = random_unit_normal(point, basis, pt_stream);
    const RealVector eig = shape_operator(spec, sub, point, z).eigenvalues();
    const double eta = 1.0 / (2.0 * std::sqrt(2.0));
    const int d = static_cast<int>(eig.size());
    const int side = 2 * n - 4;
    for (int i = 0; i < d; ++i) {
      double target = 0;
      if (i < side) target = -eta;
      else if (i >= d - side) target = eta;
      c.require(std::abs(eig[i] - target) <= 1e-8,
                "rank-1 min curvature N=" + std::to_string(n) + " index " +
                    std::to_string(i) + ": " + fmt(eig[i], "%.6g") + " vs " +
                    fmt(target, "%.6g"));
    }
    c.require(d - 2 * side == n * n - 4 * n + 6,
              "rank-1 min zero multiplicity N=" + std::to_string(n));
  }

  // Totally geodesic cases: zero operator.
  for (int n : {3, 5}) {
    RandomStream pt_stream(opts.seed, 640 + n);
    const LandscapeSpec r1 = rank_one_spec(n);
    const CriticalSubmanifold max_sub = build_submanifold(r1, rank_one_max_table(n));
    const CriticalPoint p1 = random_critical_point(r1, rank_one_max_table(n), pt_stream);
    const TangentBasis b1 = tangent_basis(r1, max_sub, p1);
    const ShapeOperator op1 =
        shape_operator(r1, max_sub, p1, random_unit_normal(p1, b1, pt_stream));
    c.require(op1.matrix.cwiseAbs().maxCoeff() <= 1e-12, "rank-1 max not geodesic");

    const LandscapeSpec torus = nondegenerate_spec(n);
    const ContingencyTable table = random_table(torus, pt_stream);
    const CriticalSubmanifold sub = build_submanifold(torus, table);
    const CriticalPoint p2 = random_critical_point(torus, table, pt_stream);
    const TangentBasis b2 = tangent_basis(torus, sub, p2);
    const ShapeOperator op2 =
        shape_operator(torus, sub, p2, random_unit_normal(p2, b2, pt_stream));
    c.require(op2.matrix.cwiseAbs().maxCoeff() <= 1e-12, "torus not geodesic");
  }

  return finish("curvature-structure", start, c,
                std::to_string(draws) + " random draws: worst trace " +
                    fmt(worst_trace) + ", pairing " + fmt(worst_pair) +
                    ", off-block " + fmt(worst_block) + ", mean curvature " +
                    fmt(worst_mean) + "; rank-1 min curvatures and geodesic cases OK");
}

CheckResult check_asymptotics(const VerifyOptions& opts) {
  const double start = now_seconds();
  Checker c;

  const LandscapeSpec base = rank_one_spec(2);
  const ContingencyTable max_table = rank_one_max_table(2);
  const ContingencyTable min_table = rank_one_min_table(2);
  c.require(zeta_exponent(base, max_table) == 1, "rank-1 max zeta != 1");
  c.require(zeta_exponent(base, min_table) == 0, "rank-1 min zeta != 0");
  c.require(build_submanifold(base, min_table).value == 0.0,
            "rank-1 min critical value != 0");

  const BoundSequence seq = bound_sequence(base, max_table, 0.5, 1, 200);
  for (const auto& point : seq.points) {
    if (point.z > 4 && point.log_f) {
      c.require(*point.log_f < 0, "D not decreasing at z=" + std::to_string(point.z));
    }
  }
  std::vector<double> log_z, log_g;
  for (const auto& point : seq.points) {
    if (point.z >= 50 && point.z <= 200 && point.log_g) {
      log_z.push_back(std::log(static_cast<double>(point.z)));
      log_g.push_back(*point.log_g);
    }
  }
  const double slope = fit_slope(log_z, log_g);
  const double target = -2.0 * seq.zeta;
  c.require(std::abs(slope - target) <= 0.1 * std::abs(target),
            "G slope " + fmt(slope, "%.4f") + " not within 10% of " + fmt(target));

  // Factorial-speed decay: six orders below D^{N0+1} by z = 30 at eps <= 1.
  for (double eps : {1.0, 0.5}) {
    const BoundSequence decay = bound_sequence(base, max_table, eps, 3, 30);
    c.require(decay.points.back().log_d <
                  decay.points.front().log_d - 6.0 * std::log(10.0),
              "decay slower than 1e-6 by z=30 at eps=" + fmt(eps));
  }

  // zeta = 0 exactly on the v = 0 table, rank-1 family.
  for (int n : {2, 3, 4}) {
    const LandscapeSpec r1 = rank_one_spec(n);
    for (const auto& table : all_tables(r1)) {
      const double v = build_submanifold(r1, table).value;
      const int zeta = zeta_exponent(r1, table);
      c.require((zeta == 0) == (v == 0.0),
                "zeta/value mismatch N=" + std::to_string(n) + " table " + table.key());
    }
  }

  // A structure with genuine zero blocks: zeta = 0 iff v = 0 over all tables,
  // and the codimension recursion is exact.
  const LandscapeSpec zero_spec({0.6, 0.3, 0.0}, {1, 2, 2}, {0.8, 0.0}, {2, 3});
  for (const auto& table : all_tables(zero_spec)) {
    const CriticalSubmanifold sub = build_submanifold(zero_spec, table);
    const int zeta = zeta_exponent(zero_spec, table);
    c.require((zeta == 0) == (sub.value == 0.0),
              "zeta/value mismatch for zero-block spec, table " + table.key());
    c.require(zeta >= 0, "negative zeta");
    long long prev_codim = -1;
    for (int z = 1; z <= 12; ++z) {
      const EmbeddedLandscape emb = embed(zero_spec, table, z);
      const long long codim = build_submanifold(emb.spec, emb.table).codim;
      if (prev_codim >= 0) {
        c.require(codim - prev_codim == 2 * zeta,
                  "codimension recursion broken at z=" + std::to_string(z));
      }
      prev_codim = codim;
    }
  }

  // Random bases: v != 0 forces zeta >= 1, and the recursion stays exact.
  RandomStream stream(opts.seed, 701);
  for (int t = 0; t < (opts.quick ? 4 : 10); ++t) {
    const int n = 2 + t % 4;
    const LandscapeSpec spec = random_landscape_spec(n, stream);
    const ContingencyTable table = random_table(spec, stream);
    const double v = build_submanifold(spec, table).value;
    const int zeta = zeta_exponent(spec, table);
    if (v != 0.0) c.require(zeta >= 1, "nonzero value with zeta=0");
    long long prev_codim = -1;
    for (int z = 1; z <= 10; ++z) {
      const EmbeddedLandscape emb = embed(spec, table, z);
      const long long codim = build_submanifold(emb.spec, emb.table).codim;
      if (prev_codim >= 0) {
        c.require(codim - prev_codim == 2 * zeta, "random-base recursion broken");
      }
      prev_codim = codim;
    }
  }

  return finish("embedding-asymptotics", start, c,
                "zeta(max)=1, zeta(min)=0; D^z decreasing to z=200; G slope " +
                    fmt(slope, "%.4f") + " vs -2; recursion exact");
}

CheckResult check_conjecture_harness(const VerifyOptions& opts) {
  const double start = now_seconds();
  Checker c;

  // Equality case: a single eigenvector direction with |beta| = beta_min
  // attains the bound.
  const LandscapeSpec spec({0.9, 0.5, 0.2}, {1, 1, 2}, {0.8, 0.4, 0.1}, {2, 1, 1});
  std::vector<int> identity(spec.dim());
  for (int i = 0; i < spec.dim(); ++i) identity[i] = i;
  const ContingencyTable table = table_from_permutation(spec, identity);
  RandomStream stream(opts.seed, 801);
  const CriticalPoint point = random_critical_point(spec, table, stream);
  const auto vectors = nonzero_hessian_eigenvectors(spec, point.pairing);
  c.require(!vectors.empty(), "no nonzero eigenvectors in equality case");
  double beta_min = std::abs(vectors.front().beta);
  size_t min_index = 0;
  for (size_t v = 0; v < vectors.size(); ++v) {
    if (std::abs(vectors[v].beta) < beta_min) {
      beta_min = std::abs(vectors[v].beta);
      min_index = v;
    }
  }
  const std::vector<double> grid = uniform_grid(0.0, M_PI / (2 * std::sqrt(2.0)), 200);
  {
    const SkewHermitianMatrix a =
        assemble_normal_direction(point, {vectors[min_index]}, {1.0});
    const std::vector<double> f = f_along_normal(spec, point, a, grid);
    double worst = 0, min_slack = f[0];
    for (size_t i = 0; i < grid.size(); ++i) {
      const double floor_i = conjecture_floor(beta_min, grid[i]);
      worst = std::max(worst, std::abs(f[i] - floor_i));
      min_slack = std::min(min_slack, f[i] - floor_i);
    }
    c.require(worst <= 1e-8, "equality case deviates by " + fmt(worst));
    c.require(min_slack >= tol::kSlackFloor, "equality case violates the floor");
    // Harness self-test: an inverted tolerance must flag the equality case.
    c.require(!(min_slack >= 1e-3), "inverted tolerance failed to detect equality");
  }

  // Disjoint-pair direction matches the analytic superposition.
  {
    size_t first = 0, second = vectors.size();
    for (size_t v = 1; v < vectors.size(); ++v) {
      if (vectors[v].j != vectors[first].j && vectors[v].j != vectors[first].k &&
          vectors[v].k != vectors[first].j && vectors[v].k != vectors[first].k) {
        second = v;
        break;
      }
    }
    c.require(second < vectors.size(), "no disjoint eigenvector pair found");
    if (second < vectors.size()) {
      const std::vector<double> alpha = {0.6, 0.8};
      const SkewHermitianMatrix a = assemble_normal_direction(
          point, {vectors[first], vectors[second]}, alpha);
      const std::vector<double> f = f_along_normal(spec, point, a, grid);
      double worst = 0, min_slack = f[0];
      for (size_t i = 0; i < grid.size(); ++i) {
        double expected = 0;
        const double betas[2] = {vectors[first].beta, vectors[second].beta};
        for (int l = 0; l < 2; ++l) {
          const double sine = std::sin(std::sqrt(2.0) * alpha[l] * grid[i]);
          expected += 0.5 * betas[l] * betas[l] * sine * sine;
        }
        worst = std::max(worst, std::abs(f[i] - expected));
        min_slack = std::min(min_slack, f[i] - conjecture_floor(beta_min, grid[i]));
      }
      c.require(worst <= 1e-8, "disjoint-pair deviation " + fmt(worst));
      c.require(min_slack >= tol::kSlackFloor, "disjoint-pair violates the floor");
    }
  }

  // Randomized campaigns.
  std::uint64_t total_trials = 0, total_failures = 0;
  double global_min_slack = std::numeric_limits<double>::infinity();
  const std::vector<std::pair<int, std::uint64_t>> plan =
      opts.quick ? std::vector<std::pair<int, std::uint64_t>>{{4, 300}, {6, 300}}
                 : std::vector<std::pair<int, std::uint64_t>>{
                       {4, 10000}, {6, 10000}, {8, 10000}, {12, 10000}, {256, 10}};
  for (const auto& [n, trials] : plan) {
    CampaignConfig config;
    config.trials = trials;
    config.seed = opts.seed + static_cast<std::uint64_t>(n);
    config.dims = {n};
    config.grid_points = 200;
    config.threads = opts.threads;
    const CampaignResult result = conjecture_campaign(config);
    total_trials += result.trials;
    total_failures += result.failures;
    global_min_slack = std::min(global_min_slack, result.min_slack);
    c.require(result.failures == 0,
              "campaign N=" + std::to_string(n) + " has " +
                  std::to_string(result.failures) + " violations");
  }

  return finish("conjecture-harness", start, c,
                "equality/disjoint cases within 1e-8; self-test detects; " +
                    std::to_string(total_trials) + " random trials, " +
                    std::to_string(total_failures) + " violations, min slack " +
                    fmt(global_min_slack) +
                    (opts.quick ? " (quick: N=256 skipped)" : ""));
}

CheckResult check_determinism(const VerifyOptions& opts) {
  const double start = now_seconds();
  Checker c;

  {
    RandomStream a(opts.seed, 7), b(opts.seed, 7);
    const UnitaryMatrix ua = haar_unitary(5, a), ub = haar_unitary(5, b);
    c.require(ua == ub, "haar draw not bit-identical across calls");
  }

  {
    CampaignConfig config;
    config.trials = 64;
    config.seed = opts.seed + 901;
    config.dims = {4, 6};
    config.threads = 1;
    std::vector<ConjectureTrialRecord> first, second;
    auto collect = [](std::vector<ConjectureTrialRecord>& into) {
      return [&into](const ConjectureTrialRecord& r) { into.push_back(r); };
    };
    const CampaignResult r1 = conjecture_campaign(config, collect(first));
    config.threads = 4;
    const CampaignResult r2 = conjecture_campaign(config, collect(second));
    c.require(r1.failures == r2.failures && r1.min_slack == r2.min_slack,
              "campaign summary differs across thread counts");
    c.require(first.size() == second.size(), "record count differs");
    for (size_t i = 0; i < first.size() && i < second.size(); ++i) {
      const bool same = first[i].stream_id == second[i].stream_id &&
                        first[i].min_slack == second[i].min_slack &&
                        first[i].coefficients == second[i].coefficients &&
                        first[i].spec_summary == second[i].spec_summary &&
                        first[i].table_key == second[i].table_key;
      c.require(same, "trial record " + std::to_string(i) + " differs");
    }
  }

  {
    const LandscapeSpec spec = rank_one_spec(2);
    const EmpiricalEstimate e1 = empirical_volfrac(spec, 0.2, 20000, opts.seed + 902, 1);
    const EmpiricalEstimate e2 = empirical_volfrac(spec, 0.2, 20000, opts.seed + 902, 4);
    c.require(e1.hits == e2.hits, "empirical hits differ across thread counts");
  }

  // CLI byte-identity for every command, and across --threads where the
  // command is parallel.
  {
    auto run = [](const std::vector<std::string>& args) {
      std::ostringstream out, err;
      const int code = run_cli(args, out, err);
      return std::make_pair(code, out.str());
    };
    const std::vector<std::string> landscape_flags = {
        "--rho-values", "1,0", "--rho-mults", "1,4",
        "--obs-values", "1,0", "--obs-mults", "1,4", "--seed", "5"};
    for (const char* command :
         {"enumerate", "spectrum", "volfrac", "curvature", "asymptotics"}) {
      std::vector<std::string> args = {command};
      args.insert(args.end(), landscape_flags.begin(), landscape_flags.end());
      if (std::string(command) == "volfrac") args.insert(args.end(), {"--eps", "0.1"});
      if (std::string(command) == "asymptotics") args.insert(args.end(), {"--zmax", "8"});
      const auto first = run(args), second = run(args);
      c.require(first.first == 0 && first == second,
                std::string(command) + " output not byte-identical");
    }
    std::string empirical_reference;
    for (unsigned threads : {1u, 2u}) {
      std::vector<std::string> args = {"empirical", "--eps", "0.3", "--trials",
                                       "4000", "--threads", std::to_string(threads)};
      args.insert(args.end(), landscape_flags.begin(), landscape_flags.end());
      const auto result = run(args);
      c.require(result.first == 0, "empirical run failed");
      if (threads == 1) empirical_reference = result.second;
      else c.require(result.second == empirical_reference,
                     "empirical output differs across --threads");
    }

    std::vector<std::string> conj = {"conjecture", "--trials", "24", "--seed", "11",
                                     "--dims", "4", "--threads", "1"};
    const auto ca = run(conj);
    conj.back() = "2";
    const auto cb = run(conj);
    c.require(ca.first == 0 && ca.second == cb.second,
              "conjecture output differs across --threads");
  }

  return finish("determinism", start, c,
                "haar, campaign, empirical, and CLI outputs identical across "
                "runs and thread counts");
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          std::ostream& out,
                                          std::ostream* progress) {
  using CheckFn = CheckResult (*)(const VerifyOptions&);
  const std::pair<const char*, CheckFn> checks[] = {
      {"1", check_volume_quotient},
      {"2", check_worked_volume_formulas},
      {"3", check_gradient_hessian},
      {"4", check_volfrac_consistency},
      {"5", check_tube_bound_dominance},
      {"6", check_curvature},
      {"7", check_asymptotics},
      {"8", check_conjecture_harness},
      {"9", check_determinism},
  };
  std::vector<CheckResult> results;
  for (const auto& [label, fn] : checks) {
    if (progress) *progress << "running " << label << "..." << std::endl;
    CheckResult result = fn(opts);
    out << (result.pass ? "PASS " : "FAIL ") << label << " " << result.name
        << " -- " << result.detail << "\n";
    out.flush();
    if (progress) {
      *progress << "  " << result.name << ": " << fmt(result.seconds, "%.1f")
                << "s" << std::endl;
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace landscape
