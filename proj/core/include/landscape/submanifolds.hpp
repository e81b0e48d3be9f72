#pragma once

#include "landscape/landscape.hpp"

namespace landscape {

// One critical submanifold: the orbit U(m) P U(n) indexed by a contingency
// table, together with its critical value, dimension, and Hessian spectrum.
struct CriticalSubmanifold {
  ContingencyTable table;
  PairingPermutation pairing;   // canonical representative
  double value = 0;             // sum_ij k_ij rho_i obs_j
  long long dim = 0;            // sum m_j² + sum n_i² - sum k_ij²
  long long codim = 0;          // N² - dim
  HessianSpectrum spectrum;
};

CriticalSubmanifold build_submanifold(const LandscapeSpec& spec,
                                      const ContingencyTable& table);

// Every critical submanifold, sorted by descending critical value with
// row-major table order breaking ties.
std::vector<CriticalSubmanifold> enumerate_submanifolds(
    const LandscapeSpec& spec, std::uint64_t max_tables = 1'000'000);

}  // namespace landscape
