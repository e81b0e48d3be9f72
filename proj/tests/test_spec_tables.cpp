#include <doctest.h>

#include <algorithm>

#include "landscape/linalg.hpp"
#include "landscape/submanifolds.hpp"

using namespace landscape;

TEST_CASE("LandscapeSpec validation names the offending field") {
  CHECK_THROWS_WITH_AS(LandscapeSpec({0.5, 1.0}, {1, 1}, {1.0, 0.0}, {1, 1}),
                       doctest::Contains("rho.values"), InvalidInput);
  CHECK_THROWS_WITH_AS(LandscapeSpec({1.0, 0.0}, {1, 1}, {1.0, 0.0}, {1, 3}),
                       doctest::Contains("multiplicities sum"), InvalidInput);
  CHECK_THROWS_WITH_AS(LandscapeSpec({1.0}, {0}, {1.0}, {1}),
                       doctest::Contains("rho.multiplicities"), InvalidInput);
  CHECK_THROWS_AS(LandscapeSpec({}, {}, {1.0}, {1}), InvalidInput);
}

TEST_CASE("eigenvalue grouping by relative tolerance") {
  const LandscapeSpec spec = LandscapeSpec::from_eigenvalues(
      {0.5, 1.0, 1.0 + 1e-12}, {0.2, 0.2, 0.9});
  CHECK(spec.rho_block_count() == 2);
  CHECK(spec.rho_mults()[0] == 2);
  CHECK(spec.obs_block_count() == 2);
  CHECK(spec.obs_mults()[1] == 2);
  CHECK(spec.dim() == 3);
}

TEST_CASE("spec expansion helpers") {
  const LandscapeSpec spec({0.7, 0.1}, {1, 2}, {0.9, 0.4, 0.2}, {1, 1, 1});
  CHECK(spec.dim() == 3);
  CHECK(spec.rho_full()[2] == 0.1);
  CHECK(spec.rho_block_of(0) == 0);
  CHECK(spec.rho_block_of(2) == 1);
  CHECK(spec.obs_block_offset(2) == 2);
  CHECK(spec.rho_matrix()(1, 1) == Complex(0.1, 0));
  CHECK(spec.hash() == LandscapeSpec({0.7, 0.1}, {1, 2}, {0.9, 0.4, 0.2}, {1, 1, 1}).hash());
}

TEST_CASE("table enumeration matches hand counts") {
  const LandscapeSpec two({1.0, 0.0}, {1, 1}, {1.0, 0.0}, {1, 1});
  const auto tables = all_tables(two);
  REQUIRE(tables.size() == 2);
  // Ascending row-major lexicographic order.
  CHECK(tables[0].key() == "0,1;1,0");
  CHECK(tables[1].key() == "1,0;0,1");

  const LandscapeSpec wide({1.0}, {2}, {1.0, 0.0}, {1, 1});
  const auto single = all_tables(wide);
  REQUIRE(single.size() == 1);
  CHECK(single[0].key() == "1,1");

  const LandscapeSpec three({1.0, 0.5, 0.0}, {1, 1, 1}, {1.0, 0.5, 0.0}, {1, 1, 1});
  CHECK(all_tables(three).size() == 6);
}

TEST_CASE("table count for fully nondegenerate margins is N!") {
  std::uint64_t factorial = 1;
  for (int n = 2; n <= 6; ++n) {
    factorial *= n;
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = n - i;
    const LandscapeSpec spec(vals, std::vector<int>(n, 1), vals, std::vector<int>(n, 1));
    std::uint64_t count = 0;
    enumerate_tables(spec, [&](const ContingencyTable& t) {
      ++count;
      for (int i = 0; i < t.rows(); ++i) CHECK(t.row_sum(i) == 1);
      for (int j = 0; j < t.cols(); ++j) CHECK(t.col_sum(j) == 1);
    });
    CHECK(count == factorial);
  }
}

TEST_CASE("enumeration guard throws") {
  std::vector<double> vals(5);
  for (int i = 0; i < 5; ++i) vals[i] = 5 - i;
  const LandscapeSpec spec(vals, std::vector<int>(5, 1), vals, std::vector<int>(5, 1));
  CHECK_THROWS_AS(all_tables(spec, 10), GuardExceeded);
}

TEST_CASE("canonical permutation block assignment") {
  // Diagonal table of a fully aligned structure: identity pairing.
  const LandscapeSpec aligned({1.0, 0.0}, {2, 2}, {0.8, 0.3}, {2, 2});
  const auto diag = ContingencyTable::from_rows({{2, 0}, {0, 2}});
  const PairingPermutation id = canonical_permutation(aligned, diag);
  for (int j = 0; j < 4; ++j) CHECK(id(j) == j);

  // Rank-1 minimum at N=4: lambda_1 pairs with a zero sigma index and one
  // zero lambda index pairs with sigma_1.
  const LandscapeSpec rank1({1.0, 0.0}, {1, 3}, {1.0, 0.0}, {1, 3});
  const auto min_table = ContingencyTable::from_rows({{0, 1}, {1, 2}});
  const PairingPermutation pi = canonical_permutation(rank1, min_table);
  CHECK(pi(0) == 1);  // lambda_1 -> second sigma slot (value 0)
  CHECK(pi(1) == 0);  // first zero lambda -> sigma_1
  CHECK(pi(2) == 2);
  CHECK(pi(3) == 3);

  // 2x2 antidiagonal: the transposition.
  const LandscapeSpec two({1.0, 0.0}, {1, 1}, {1.0, 0.0}, {1, 1});
  const auto anti = ContingencyTable::from_rows({{0, 1}, {1, 0}});
  const PairingPermutation swap = canonical_permutation(two, anti);
  CHECK(swap(0) == 1);
  CHECK(swap(1) == 0);
}

TEST_CASE("canonical permutation round-trips through its table") {
  RandomStream stream(5);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 5;
    std::vector<double> vals;
    std::vector<int> mults;
    int left = n;
    while (left > 0) {
      const int part = 1 + static_cast<int>(stream.uniform_below(left));
      mults.push_back(part);
      left -= part;
    }
    for (size_t i = 0; i < mults.size(); ++i) vals.push_back(mults.size() - i);
    const LandscapeSpec spec(vals, mults, vals, mults);
    for (const auto& table : all_tables(spec)) {
      const PairingPermutation pi = canonical_permutation(spec, table);
      CHECK(table_from_permutation(spec, pi.map()) == table);
    }
  }
}

TEST_CASE("pairing permutation validity and matrix convention") {
  CHECK_THROWS_AS(PairingPermutation({0, 0}), InvalidInput);
  const PairingPermutation pi({1, 2, 0});
  const ComplexMatrix p = pi.matrix();
  for (int j = 0; j < 3; ++j) CHECK(p(pi(j), j) == Complex(1, 0));
  CHECK(unitarity_error(p) <= 1e-14);
}

TEST_CASE("nondegenerate submanifold values are the permutation sums") {
  const LandscapeSpec spec({0.9, 0.6, 0.3}, {1, 1, 1}, {0.8, 0.5, 0.1}, {1, 1, 1});
  const auto subs = enumerate_submanifolds(spec);
  REQUIRE(subs.size() == 6);
  std::vector<double> expected;
  std::vector<int> perm = {0, 1, 2};
  do {
    double v = 0;
    for (int j = 0; j < 3; ++j) v += spec.rho_values()[j] * spec.obs_values()[perm[j]];
    expected.push_back(v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(expected.begin(), expected.end(), std::greater<double>());
  for (size_t i = 0; i < 6; ++i) {
    CHECK(subs[i].value == doctest::Approx(expected[i]).epsilon(1e-14));
    CHECK(subs[i].dim == 3);  // N-dimensional tori
  }
}

TEST_CASE("table validation catches margin mismatches") {
  const LandscapeSpec spec({1.0, 0.0}, {1, 3}, {1.0, 0.0}, {2, 2});
  auto bad = ContingencyTable::from_rows({{1, 0}, {0, 3}});
  CHECK_THROWS_WITH_AS(validate_table(spec, bad), doctest::Contains("column sum"),
                       InvalidInput);
  auto good = ContingencyTable::from_rows({{1, 0}, {1, 2}});
  CHECK_NOTHROW(validate_table(spec, good));
}
