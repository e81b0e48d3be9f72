#include <doctest.h>

#include <cmath>

#include "landscape/montecarlo.hpp"
#include "landscape/verify.hpp"
#include "landscape/volumes.hpp"

using namespace landscape;

namespace {

double log_of(double v) { return std::log(v); }

}  // namespace

TEST_CASE("LogVolume arithmetic is exact in the 2pi exponent") {
  const LogVolume a = LogVolume::two_pi_power_half(5) * LogVolume::from_factor(3.0);
  const LogVolume b = LogVolume::two_pi_power_half(-2) * LogVolume::from_factor(7.0);
  const LogVolume p = a * b;
  CHECK(p.two_pi_numerator() == 3);
  CHECK(p.residual_log() == doctest::Approx(std::log(21.0)));
  const LogVolume q = a / b;
  CHECK(q.two_pi_numerator() == 7);
  CHECK(q.value() == doctest::Approx(std::pow(2 * M_PI, 3.5) * 3.0 / 7.0));
  CHECK_THROWS_AS(LogVolume::from_factor(-1.0), InvalidInput);
}

TEST_CASE("odd sphere volumes") {
  CHECK(vol_odd_sphere(0).log_value() == doctest::Approx(log_of(2 * M_PI)));
  CHECK(vol_odd_sphere(1).log_value() ==
        doctest::Approx(log_of(2 * M_PI * M_PI)));
  CHECK(vol_odd_sphere(2).log_value() ==
        doctest::Approx(log_of(M_PI * M_PI * M_PI)));
  CHECK_THROWS_AS(vol_odd_sphere(-1), InvalidInput);
}

TEST_CASE("Chevalley cell volumes") {
  const int one[] = {1};
  const int two[] = {2};
  const int two_one[] = {2, 1};
  CHECK(chevalley_cell_volume(one).value() == doctest::Approx(1.0));
  CHECK(chevalley_cell_volume(two).value() == doctest::Approx(2.0));
  CHECK(chevalley_cell_volume(two_one).value() == doctest::Approx(2.0));
}

TEST_CASE("unitary product volumes in closed form") {
  const int one[] = {1};
  const int two[] = {2};
  const int two_one[] = {2, 1};
  CHECK(vol_unitary_product(one).two_pi_numerator() == 2);
  CHECK(vol_unitary_product(one).residual_log() == 0.0);
  CHECK(vol_unitary_product(two).two_pi_numerator() == 6);
  CHECK(vol_unitary_product(two).residual_log() == 0.0);
  CHECK(vol_unitary_product(two_one).two_pi_numerator() == 8);
  CHECK(vol_unitary_product(two_one).residual_log() == 0.0);
  CHECK(vol_unitary_group(3).log_value() ==
        doctest::Approx(6 * log_of(2 * M_PI) - std::log(2.0)));
}

TEST_CASE("Macdonald route equals the closed form") {
  RandomStream stream(61);
  for (int t = 0; t < 40; ++t) {
    const int parts = 1 + static_cast<int>(stream.uniform_below(6));
    std::vector<int> mults(parts);
    for (int& a : mults) a = 1 + static_cast<int>(stream.uniform_below(256 / parts));
    LogVolume produced = chevalley_cell_volume(mults);
    for (int a : mults) {
      for (int s = 0; s < a; ++s) produced *= vol_odd_sphere(s);
    }
    const LogVolume ratio = vol_unitary_product(mults) / produced;
    CHECK(ratio.two_pi_numerator() == 0);
    CHECK(std::abs(ratio.residual_log()) <= 1e-10);
  }
}

TEST_CASE("orbit volumes of the worked examples") {
  const LandscapeSpec spec = rank_one_spec(3);
  const LogVolume max_vol = vol_orbit(spec, build_submanifold(spec, rank_one_max_table(3)));
  CHECK(max_vol.two_pi_numerator() == 8);  // (2 pi)^4
  CHECK(max_vol.residual_log() == 0.0);
  const LogVolume min_vol = vol_orbit(spec, build_submanifold(spec, rank_one_min_table(3)));
  CHECK(min_vol.two_pi_numerator() == 10);  // (2 pi)^5
  CHECK(min_vol.residual_log() == 0.0);

  for (int n : {2, 4, 6}) {
    const LandscapeSpec torus = nondegenerate_spec(n);
    const auto tables = all_tables(torus);
    const LogVolume vol = vol_orbit(torus, build_submanifold(torus, tables.front()));
    CHECK(vol.two_pi_numerator() == 2 * n);
    CHECK(vol.residual_log() == 0.0);
  }
}

TEST_CASE("orbit volume satisfies the group quotient identity") {
  RandomStream stream(67);
  for (int t = 0; t < 6; ++t) {
    const int n = 2 + static_cast<int>(stream.uniform_below(9));
    const LandscapeSpec spec = random_landscape_spec(n, stream);
    std::vector<ContingencyTable> tables;
    try {
      tables = all_tables(spec, 5000);
    } catch (const GuardExceeded&) {
      continue;
    }
    std::vector<int> mn(spec.obs_mults());
    mn.insert(mn.end(), spec.rho_mults().begin(), spec.rho_mults().end());
    const LogVolume whole = vol_unitary_product(mn);
    for (const auto& table : tables) {
      std::vector<int> k_entries;
      for (int i = 0; i < table.rows(); ++i) {
        for (int j = 0; j < table.cols(); ++j) {
          if (table.at(i, j) > 0) k_entries.push_back(table.at(i, j));
        }
      }
      const LogVolume lhs =
          vol_orbit(spec, build_submanifold(spec, table)) * vol_unitary_product(k_entries);
      const LogVolume ratio = lhs / whole;
      CHECK(ratio.two_pi_numerator() == 0);
      CHECK(std::abs(ratio.residual_log()) <= 1e-12);
    }
  }
}

TEST_CASE("volume fraction estimates of the worked examples") {
  for (int n = 2; n <= 6; ++n) {
    const LandscapeSpec spec = rank_one_spec(n);
    const auto max_est = volfrac_estimate(spec, build_submanifold(spec, rank_one_max_table(n)));
    CHECK(max_est.epsilon_power == 2 * n - 2);
    CHECK(std::abs(max_est.coefficient.log_value() + (n - 1) * std::log(2.0)) <= 1e-12);

    const auto min_est = volfrac_estimate(spec, build_submanifold(spec, rank_one_min_table(n)));
    CHECK(min_est.epsilon_power == 2);
    CHECK(std::abs(min_est.coefficient.log_value() - std::log((n - 1) / 2.0)) <= 1e-12);
  }

  // Fully nondegenerate: prod s! / (2^{N(N-1)/2} ((N^2-N)/2)! prod |beta|).
  const int n = 3;
  const LandscapeSpec torus = nondegenerate_spec(n);
  std::vector<int> identity = {0, 1, 2};
  const auto sub = build_submanifold(torus, table_from_permutation(torus, identity));
  const auto est = volfrac_estimate(torus, sub);
  CHECK(est.epsilon_power == n * n - n);
  const double expected = log_superfactorial(n) -
                          (n * (n - 1) / 2) * std::log(2.0) -
                          log_factorial((n * n - n) / 2) -
                          sub.spectrum.log_abs_product();
  CHECK(std::abs(est.coefficient.log_value() - expected) <= 1e-12);
}

TEST_CASE("rank-1 N=2 estimates sum to eps^2") {
  const LandscapeSpec spec = rank_one_spec(2);
  const auto subs = enumerate_submanifolds(spec);
  REQUIRE(subs.size() == 2);
  for (double eps : {0.05, 0.1, 0.2}) {
    double total = 0;
    for (const auto& sub : subs) total += volfrac_estimate(spec, sub).evaluate(eps);
    CHECK(std::abs(total - eps * eps) <= 1e-15);
  }
}

TEST_CASE("codimension-zero landscapes have no estimate") {
  const LandscapeSpec constant({1.0}, {3}, {1.0, 0.0}, {1, 2});
  const auto subs = enumerate_submanifolds(constant);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].codim == 0);
  CHECK_THROWS_WITH_AS(volfrac_estimate(constant, subs[0]),
                       doctest::Contains("no near-critical estimate"), InvalidInput);
}

TEST_CASE("spherical tube bound values and dominance") {
  const LandscapeSpec spec = rank_one_spec(3);
  const auto max_sub = build_submanifold(spec, rank_one_max_table(3));
  CHECK(spherical_tube_bound(spec, max_sub, 0.1) == doctest::Approx(2.5e-5));

  // Doubling eps scales by 2^{N^2 - d}.
  const double ratio = spherical_tube_bound(spec, max_sub, 0.2) /
                       spherical_tube_bound(spec, max_sub, 0.1);
  CHECK(ratio == doctest::Approx(std::pow(2.0, max_sub.codim)));

  // All |beta| equal: bound coincides with the estimate.
  const auto est = volfrac_estimate(spec, max_sub);
  const auto bound = spherical_tube_coefficient(spec, max_sub);
  CHECK(std::abs(est.coefficient.log_value() - bound.coefficient.log_value()) <= 1e-12);

  // Distinct |beta|: strict dominance.
  RandomStream stream(71);
  const LandscapeSpec mixed({0.9, 0.4, 0.1}, {1, 1, 1}, {0.8, 0.3, 0.05}, {1, 1, 1});
  for (const auto& table : all_tables(mixed)) {
    const auto sub = build_submanifold(mixed, table);
    const double gap = spherical_tube_coefficient(mixed, sub).coefficient.log_value() -
                       volfrac_estimate(mixed, sub).coefficient.log_value();
    if (sub.spectrum.all_abs_equal()) CHECK(std::abs(gap) <= 1e-9);
    else CHECK(gap > 0);
  }
}
