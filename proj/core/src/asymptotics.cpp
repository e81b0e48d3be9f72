#include "landscape/asymptotics.hpp"

#include <cmath>

namespace landscape {

namespace {

constexpr double kZeroValueTol = 1e-12;

int zero_block_index(const std::vector<double>& values) {
  for (size_t b = 0; b < values.size(); ++b) {
    if (std::abs(values[b]) <= kZeroValueTol) return static_cast<int>(b);
  }
  return -1;
}

// Where a zero block would be inserted to keep the values descending.
int zero_insert_position(const std::vector<double>& values) {
  int pos = 0;
  while (pos < static_cast<int>(values.size()) && values[pos] > 0) ++pos;
  return pos;
}

struct ZeroBlocks {
  int rho_block;  // row of the rho zero block
  int obs_block;  // column of the obs zero block
};

// Zero-block bookkeeping of an already-embedded landscape (z >= 1 always
// has both blocks).
ZeroBlocks locate_zero_blocks(const LandscapeSpec& spec) {
  return {zero_block_index(spec.rho_values()), zero_block_index(spec.obs_values())};
}

}  // namespace

EmbeddedLandscape embed(const LandscapeSpec& base, const ContingencyTable& base_table,
                        int z) {
  if (z < 0) throw InvalidInput("embed: z must be nonnegative");
  validate_table(base, base_table);
  if (z == 0) return {base, base_table};

  std::vector<double> rho_vals = base.rho_values();
  std::vector<int> rho_mults = base.rho_mults();
  std::vector<double> obs_vals = base.obs_values();
  std::vector<int> obs_mults = base.obs_mults();

  int zero_row = zero_block_index(rho_vals);
  int zero_col = zero_block_index(obs_vals);
  const bool new_row = zero_row < 0;
  const bool new_col = zero_col < 0;
  if (new_row) {
    zero_row = zero_insert_position(rho_vals);
    rho_vals.insert(rho_vals.begin() + zero_row, 0.0);
    rho_mults.insert(rho_mults.begin() + zero_row, 0);
  }
  if (new_col) {
    zero_col = zero_insert_position(obs_vals);
    obs_vals.insert(obs_vals.begin() + zero_col, 0.0);
    obs_mults.insert(obs_mults.begin() + zero_col, 0);
  }
  rho_mults[zero_row] += z;
  obs_mults[zero_col] += z;

  ContingencyTable table(static_cast<int>(rho_mults.size()),
                         static_cast<int>(obs_mults.size()));
  for (int i = 0; i < base_table.rows(); ++i) {
    const int ti = i + (new_row && i >= zero_row ? 1 : 0);
    for (int j = 0; j < base_table.cols(); ++j) {
      const int tj = j + (new_col && j >= zero_col ? 1 : 0);
      table.at(ti, tj) = base_table.at(i, j);
    }
  }
  table.at(zero_row, zero_col) += z;

  LandscapeSpec spec(std::move(rho_vals), std::move(rho_mults), std::move(obs_vals),
                     std::move(obs_mults));
  validate_table(spec, table);
  return {std::move(spec), std::move(table)};
}

int zeta_exponent(const LandscapeSpec& base, const ContingencyTable& base_table) {
  const int n0 = base.dim();
  const EmbeddedLandscape at_n0 = embed(base, base_table, n0);
  const ZeroBlocks blocks = locate_zero_blocks(at_n0.spec);
  const int rho_zero_mult = at_n0.spec.rho_mults()[blocks.rho_block];
  const int obs_zero_mult = at_n0.spec.obs_mults()[blocks.obs_block];
  const int overlap = at_n0.table.at(blocks.rho_block, blocks.obs_block);
  const int zeta = 2 * n0 - rho_zero_mult - obs_zero_mult + overlap;
  if (zeta < 0) throw NumericalFailure("zeta_exponent: negative exponent");
  return zeta;
}

BoundSequence bound_sequence(const LandscapeSpec& base, const ContingencyTable& base_table,
                             double eps, int z_lo, int z_hi) {
  if (!(eps > 0)) throw InvalidInput("bound_sequence: eps must be positive");
  if (z_lo < 0 || z_hi < z_lo) throw InvalidInput("bound_sequence: bad z range");

  BoundSequence seq;
  seq.eps = eps;
  seq.zeta = zeta_exponent(base, base_table);

  // The distinct nonzero eigenvalue set stabilizes once both zero blocks
  // exist, i.e. from z = 1 on.
  {
    const EmbeddedLandscape first = embed(base, base_table, 1);
    const CriticalSubmanifold sub = build_submanifold(first.spec, first.table);
    seq.beta_min = sub.spectrum.beta_min;
    if (seq.beta_min <= 0) {
      throw InvalidInput("bound_sequence: every Hessian eigenvalue vanishes; "
                         "no tube bound");
    }
  }

  const int n0 = base.dim();
  // Constants of the closed-form G ratio, all read at z = N_0.
  const EmbeddedLandscape at_n0 = embed(base, base_table, n0);
  const ZeroBlocks blocks = locate_zero_blocks(at_n0.spec);
  const CriticalSubmanifold sub_n0 = build_submanifold(at_n0.spec, at_n0.table);
  const double half_codim_n0 = 0.5 * static_cast<double>(sub_n0.codim);
  const int rho_zero_mult = at_n0.spec.rho_mults()[blocks.rho_block];
  const int obs_zero_mult = at_n0.spec.obs_mults()[blocks.obs_block];
  const int overlap = at_n0.table.at(blocks.rho_block, blocks.obs_block);

  std::vector<double> log_d(z_hi - z_lo + 2);
  for (int z = z_lo; z <= z_hi + 1; ++z) {
    const EmbeddedLandscape emb = embed(base, base_table, z);
    const CriticalSubmanifold sub = build_submanifold(emb.spec, emb.table);
    log_d[z - z_lo] = spherical_tube_coefficient(emb.spec, sub).log_at(eps);
  }

  for (int z = z_lo; z <= z_hi; ++z) {
    BoundSeqPoint point;
    point.z = z;
    point.n_z = n0 + z;
    const EmbeddedLandscape emb = embed(base, base_table, z);
    const CriticalSubmanifold sub = build_submanifold(emb.spec, emb.table);
    point.dim = sub.dim;
    point.codim = sub.codim;
    point.log_d = log_d[z - z_lo];
    point.log_f = log_d[z - z_lo + 1] - log_d[z - z_lo];
    if (z > n0) {
      const double zeta = seq.zeta;
      point.log_g = std::lgamma(half_codim_n0 + (z - 1 - n0) * zeta + 1.0) -
                    std::lgamma(half_codim_n0 + (z + 1 - n0) * zeta + 1.0) +
                    std::log(static_cast<double>(n0 + z)) +
                    std::log(static_cast<double>(overlap - n0 + z)) -
                    std::log(static_cast<double>(rho_zero_mult - n0 + z)) -
                    std::log(static_cast<double>(obs_zero_mult - n0 + z));
    }
    seq.points.push_back(point);
  }
  return seq;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidInput("fit_slope: need two samples of equal length");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace landscape
