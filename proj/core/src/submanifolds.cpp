#include "landscape/submanifolds.hpp"

#include <algorithm>

namespace landscape {

CriticalSubmanifold build_submanifold(const LandscapeSpec& spec,
                                      const ContingencyTable& table) {
  validate_table(spec, table);
  long long mult_squares = 0;
  for (int m : spec.obs_mults()) mult_squares += static_cast<long long>(m) * m;
  for (int n : spec.rho_mults()) mult_squares += static_cast<long long>(n) * n;
  const long long dim = mult_squares - table.sum_of_squares();

  double value = 0;
  for (int i = 0; i < table.rows(); ++i) {
    for (int j = 0; j < table.cols(); ++j) {
      value += table.at(i, j) * spec.rho_values()[i] * spec.obs_values()[j];
    }
  }

  PairingPermutation pairing = canonical_permutation(spec, table);
  HessianSpectrum spectrum = hessian_spectrum(spec, pairing);
  const long long n = spec.dim();
  return CriticalSubmanifold{table, std::move(pairing), value, dim, n * n - dim,
                             std::move(spectrum)};
}

std::vector<CriticalSubmanifold> enumerate_submanifolds(const LandscapeSpec& spec,
                                                        std::uint64_t max_tables) {
  std::vector<CriticalSubmanifold> out;
  enumerate_tables(spec,
                   [&](const ContingencyTable& t) {
                     out.push_back(build_submanifold(spec, t));
                   },
                   max_tables);
  std::sort(out.begin(), out.end(),
            [](const CriticalSubmanifold& a, const CriticalSubmanifold& b) {
              if (a.value != b.value) return a.value > b.value;
              return a.table < b.table;
            });
  return out;
}

}  // namespace landscape
