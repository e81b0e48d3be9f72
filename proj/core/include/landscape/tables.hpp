#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "landscape/spec.hpp"

namespace landscape {

// r x s nonnegative integer matrix; row i belongs to rho block i, column j
// to observable block j.  A table with margins (n_i) and (m_j) indexes one
// critical submanifold of the landscape.
class ContingencyTable {
 public:
  ContingencyTable(int rows, int cols);
  static ContingencyTable from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const { return k_[static_cast<size_t>(i) * cols_ + j]; }
  int& at(int i, int j) { return k_[static_cast<size_t>(i) * cols_ + j]; }

  int row_sum(int i) const;
  int col_sum(int j) const;
  long long sum_of_squares() const;

  // Row-major flattened comparison; defines the enumeration order.
  bool operator==(const ContingencyTable& other) const;
  bool operator<(const ContingencyTable& other) const;

  // "k11,k12;k21,k22" digest used in records and failure logs.
  std::string key() const;

 private:
  int rows_, cols_;
  std::vector<int> k_;
};

// Throws InvalidInput unless the table's margins match the spec multiplicities.
void validate_table(const LandscapeSpec& spec, const ContingencyTable& table);

// Streams every nonnegative integer matrix with margins
// (rho multiplicities, obs multiplicities) in ascending row-major
// lexicographic order; returns the count.  Throws GuardExceeded once more
// than max_tables tables have been produced.
std::uint64_t enumerate_tables(const LandscapeSpec& spec,
                               const std::function<void(const ContingencyTable&)>& sink,
                               std::uint64_t max_tables = 1'000'000);

std::vector<ContingencyTable> all_tables(const LandscapeSpec& spec,
                                         std::uint64_t max_tables = 1'000'000);

// Bijection pairing the full rho eigenvalue list with the full observable
// list: lambda_j is paired with sigma_{pi(j)} (0-based).  The permutation
// matrix convention is P(pi(j), j) = 1, which makes the critical value
// sum_j lambda_j sigma_{pi(j)} and the Hessian eigenvalue formula literal.
class PairingPermutation {
 public:
  explicit PairingPermutation(std::vector<int> sigma_of_rho);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int j) const { return map_[j]; }
  const std::vector<int>& map() const { return map_; }
  ComplexMatrix matrix() const;

 private:
  std::vector<int> map_;
};

// The block-aligned representative of the table's double coset: walking the
// cells in row-major order, the next k_ij unused indices of rho block i are
// paired with the next k_ij unused indices of observable block j.  Any coset
// member would do; this one is deterministic.
PairingPermutation canonical_permutation(const LandscapeSpec& spec,
                                         const ContingencyTable& table);

// Contingency table of an arbitrary pairing: k_ij counts full indices of
// rho block i sent into observable block j.
ContingencyTable table_from_permutation(const LandscapeSpec& spec,
                                        const std::vector<int>& sigma_of_rho);

}  // namespace landscape
