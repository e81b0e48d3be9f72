#pragma once

#include <optional>

#include "landscape/volumes.hpp"

namespace landscape {

// Dimension-embedding sequence: rho and O are padded with z extra zero
// eigenvalues each (N_z = N_0 + z), the zero blocks of both operators grow
// by one per step, and their overlap cell in the contingency table grows
// with them.  Critical values are unchanged along the sequence.
struct EmbeddedLandscape {
  LandscapeSpec spec;
  ContingencyTable table;
};

// z = 0 returns the inputs untouched.  For z >= 1 a zero block is created
// on any side that lacks one, inserted at its sorted position.
EmbeddedLandscape embed(const LandscapeSpec& base, const ContingencyTable& base_table,
                        int z);

// zeta = 2 N_0 - m_s(N_0) - n_r(N_0) + k_sr(N_0), evaluated at embedding
// step z = N_0 (total dimension 2 N_0): twice the base dimension minus both
// zero-block multiplicities plus their overlap.  Nonnegative; zero forces
// the critical value to be zero.
int zeta_exponent(const LandscapeSpec& base, const ContingencyTable& base_table);

struct BoundSeqPoint {
  int z = 0;
  int n_z = 0;
  long long dim = 0;
  long long codim = 0;
  double log_d = 0;                  // log D^z(eps), the spherical-tube bound
  std::optional<double> log_f;       // log F^z = log D^{z+1} - log D^z
  std::optional<double> log_g;       // closed-form log G^z, defined for z > N_0
};

// D^z(eps) along the embedding, its step ratio F^z, and the closed-form
// ratio-of-ratios G^z = O(z^{-2 zeta}).  All three are carried in the log
// domain.  beta_min is read off the embedded spectrum at z = 1, where the
// set of distinct nonzero Hessian eigenvalues has already stabilized.
struct BoundSequence {
  int zeta = 0;
  double beta_min = 0;
  double eps = 0;
  std::vector<BoundSeqPoint> points;
};

BoundSequence bound_sequence(const LandscapeSpec& base, const ContingencyTable& base_table,
                             double eps, int z_lo, int z_hi);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace landscape
