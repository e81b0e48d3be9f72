#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landscape/types.hpp"

namespace landscape {

// Eigenstructure of one landscape instance J(U) = Tr(U rho U† O).
//
// Both operators are stored as distinct eigenvalues (strictly descending)
// with positive multiplicities; the dense diagonal matrices are materialized
// on demand.  rho blocks are indexed by i (r of them, multiplicities n_i)
// and observable blocks by j (s of them, multiplicities m_j).
class LandscapeSpec {
 public:
  LandscapeSpec(std::vector<double> rho_values, std::vector<int> rho_mults,
                std::vector<double> obs_values, std::vector<int> obs_mults);

  // Groups full eigenvalue lists into distinct values with relative
  // tolerance rel_tol, sorting descending first.
  static LandscapeSpec from_eigenvalues(const std::vector<double>& rho_eigs,
                                        const std::vector<double>& obs_eigs,
                                        double rel_tol = 1e-10);

  // Sort descending and merge within rel_tol into (values, multiplicities).
  static std::pair<std::vector<double>, std::vector<int>> group_eigenvalues(
      std::vector<double> eigenvalues, double rel_tol = 1e-10);

  int dim() const { return dim_; }                     // N
  int rho_block_count() const { return static_cast<int>(rho_values_.size()); }
  int obs_block_count() const { return static_cast<int>(obs_values_.size()); }

  const std::vector<double>& rho_values() const { return rho_values_; }
  const std::vector<int>& rho_mults() const { return rho_mults_; }
  const std::vector<double>& obs_values() const { return obs_values_; }
  const std::vector<int>& obs_mults() const { return obs_mults_; }

  // Full eigenvalue lists, descending, length N.
  const std::vector<double>& rho_full() const { return rho_full_; }
  const std::vector<double>& obs_full() const { return obs_full_; }

  // Block (distinct-value index) of a full eigenvalue index.
  int rho_block_of(int index) const { return rho_block_of_[index]; }
  int obs_block_of(int index) const { return obs_block_of_[index]; }

  // First full index of each block.
  int rho_block_offset(int block) const { return rho_offsets_[block]; }
  int obs_block_offset(int block) const { return obs_offsets_[block]; }

  ComplexMatrix rho_matrix() const;
  ComplexMatrix obs_matrix() const;

  // FNV-1a over the canonical text form; stable across runs.
  std::uint64_t hash() const;
  std::string hash_hex() const;
  // Compact "rho=v*m,...|obs=..." digest used in records.
  std::string summary() const;

 private:
  std::vector<double> rho_values_, obs_values_;
  std::vector<int> rho_mults_, obs_mults_;
  int dim_ = 0;
  std::vector<double> rho_full_, obs_full_;
  std::vector<int> rho_block_of_, obs_block_of_;
  std::vector<int> rho_offsets_, obs_offsets_;
};

}  // namespace landscape
