#include "landscape/landscape.hpp"

#include <cmath>
#include <map>

namespace landscape {

namespace {

void check_dimension(const LandscapeSpec& spec, const ComplexMatrix& u,
                     const char* op) {
  if (u.rows() != spec.dim() || u.cols() != spec.dim()) {
    throw InvalidInput(std::string(op) + ": matrix dimension " +
                       std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                       " does not match spec dimension " +
                       std::to_string(spec.dim()));
  }
}

// [M, rho] for diagonal rho: entry (j,k) is M_jk (lambda_k - lambda_j).
ComplexMatrix commutator_with_rho(const ComplexMatrix& m,
                                  const std::vector<double>& lambda) {
  const Eigen::Index n = m.rows();
  ComplexMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      out(j, k) = m(j, k) * (lambda[k] - lambda[j]);
    }
  }
  return out;
}

double commutator_with_rho_norm2(const ComplexMatrix& m,
                                 const std::vector<double>& lambda) {
  const Eigen::Index n = m.rows();
  double sum = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double d = lambda[k] - lambda[j];
      sum += d * d * std::norm(m(j, k));
    }
  }
  return sum;
}

ComplexMatrix conjugated_obs(const LandscapeSpec& spec, const UnitaryMatrix& u) {
  // U† O U with diagonal O.
  const Eigen::Index n = u.rows();
  ComplexMatrix scaled(n, n);
  for (Eigen::Index a = 0; a < n; ++a) scaled.row(a) = spec.obs_full()[a] * u.row(a);
  return u.adjoint() * scaled;
}

}  // namespace

double eval_J(const LandscapeSpec& spec, const UnitaryMatrix& u) {
  check_dimension(spec, u, "eval_J");
  const int n = spec.dim();
  double total = 0;
  for (int a = 0; a < n; ++a) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += std::norm(u(a, j)) * spec.rho_full()[j];
    total += spec.obs_full()[a] * row;
  }
  return total;
}

ComplexMatrix grad_J(const LandscapeSpec& spec, const UnitaryMatrix& u) {
  check_dimension(spec, u, "grad_J");
  return u * commutator_with_rho(conjugated_obs(spec, u), spec.rho_full());
}

double grad_norm(const LandscapeSpec& spec, const UnitaryMatrix& u) {
  check_dimension(spec, u, "grad_norm");
  return std::sqrt(commutator_with_rho_norm2(conjugated_obs(spec, u), spec.rho_full()));
}

ComplexMatrix hess_apply(const LandscapeSpec& spec, const UnitaryMatrix& u,
                         const SkewHermitianMatrix& x, double critical_tol) {
  check_dimension(spec, u, "hess_apply");
  check_dimension(spec, x, "hess_apply");
  const double g = grad_norm(spec, u);
  if (g > critical_tol) {
    throw InvalidInput("hess_apply: point is not critical (||grad|| = " +
                       std::to_string(g) + ")");
  }
  return u * commutator_with_rho(commutator(conjugated_obs(spec, u), x),
                                 spec.rho_full());
}

long long HessianSpectrum::nonzero_count() const {
  long long c = 0;
  for (const auto& line : lines) c += line.multiplicity;
  return c;
}

double HessianSpectrum::log_abs_product() const {
  double s = 0;
  for (const auto& line : lines) {
    s += static_cast<double>(line.multiplicity) * std::log(std::abs(line.beta));
  }
  return s;
}

bool HessianSpectrum::all_abs_equal(double rel_tol) const {
  if (lines.empty()) return true;
  double lo = std::abs(lines.front().beta), hi = lo;
  for (const auto& line : lines) {
    lo = std::min(lo, std::abs(line.beta));
    hi = std::max(hi, std::abs(line.beta));
  }
  return hi - lo <= rel_tol * hi;
}

HessianSpectrum hessian_spectrum(const LandscapeSpec& spec,
                                 const PairingPermutation& pairing) {
  const int n = spec.dim();
  if (pairing.size() != n) throw InvalidInput("hessian_spectrum: pairing size mismatch");
  HessianSpectrum out;
  std::map<double, long long> merged;
  long long zeros = n;  // diagonal directions i|l><l|
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const int bi_j = spec.rho_block_of(j), bi_k = spec.rho_block_of(k);
      const int bo_j = spec.obs_block_of(pairing(j)), bo_k = spec.obs_block_of(pairing(k));
      if (bi_j == bi_k || bo_j == bo_k) {
        zeros += 2;
        continue;
      }
      const double beta = -(spec.rho_values()[bi_j] - spec.rho_values()[bi_k]) *
                          (spec.obs_values()[bo_j] - spec.obs_values()[bo_k]);
      merged[beta] += 2;
    }
  }
  out.zero_multiplicity = zeros;
  out.beta_min = 0;
  for (const auto& [beta, mult] : merged) {
    out.lines.push_back({beta, mult});
    const double mag = std::abs(beta);
    if (out.beta_min == 0 || mag < out.beta_min) out.beta_min = mag;
  }
  return out;
}

std::vector<HessianEigenvector> nonzero_hessian_eigenvectors(
    const LandscapeSpec& spec, const PairingPermutation& pairing) {
  const int n = spec.dim();
  if (pairing.size() != n) throw InvalidInput("eigenvectors: pairing size mismatch");
  std::vector<HessianEigenvector> out;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const int bi_j = spec.rho_block_of(j), bi_k = spec.rho_block_of(k);
      const int bo_j = spec.obs_block_of(pairing(j)), bo_k = spec.obs_block_of(pairing(k));
      if (bi_j == bi_k || bo_j == bo_k) continue;
      const double beta = -(spec.rho_values()[bi_j] - spec.rho_values()[bi_k]) *
                          (spec.obs_values()[bo_j] - spec.obs_values()[bo_k]);
      out.push_back({j, k, true, beta});
      out.push_back({j, k, false, beta});
    }
  }
  return out;
}

ComplexMatrix eigenvector_tilde(const HessianEigenvector& vec, int n) {
  ComplexMatrix y = ComplexMatrix::Zero(n, n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (vec.imag_sym) {
    y(vec.j, vec.k) = Complex(0, inv_sqrt2);
    y(vec.k, vec.j) = Complex(0, inv_sqrt2);
  } else {
    y(vec.j, vec.k) = Complex(inv_sqrt2, 0);
    y(vec.k, vec.j) = Complex(-inv_sqrt2, 0);
  }
  return y;
}

CriticalPoint random_critical_point(const LandscapeSpec& spec,
                                    const ContingencyTable& table,
                                    RandomStream& stream) {
  validate_table(spec, table);
  const int n = spec.dim();
  PairingPermutation pairing = canonical_permutation(spec, table);

  UnitaryMatrix v = UnitaryMatrix::Zero(n, n);
  for (int j = 0; j < spec.obs_block_count(); ++j) {
    const int off = spec.obs_block_offset(j);
    const int size = spec.obs_mults()[j];
    v.block(off, off, size, size) = haar_unitary(size, stream);
  }
  UnitaryMatrix w = UnitaryMatrix::Zero(n, n);
  for (int i = 0; i < spec.rho_block_count(); ++i) {
    const int off = spec.rho_block_offset(i);
    const int size = spec.rho_mults()[i];
    w.block(off, off, size, size) = haar_unitary(size, stream);
  }

  CriticalPoint point{v * pairing.matrix() * w.adjoint(), std::move(v), std::move(w),
                      std::move(pairing)};
  return point;
}

ComplexMatrix from_tilde_frame(const CriticalPoint& point, const ComplexMatrix& tilde) {
  return point.rho_factor * tilde * point.rho_factor.adjoint();
}

ComplexMatrix to_tilde_frame(const CriticalPoint& point, const ComplexMatrix& generator) {
  return point.rho_factor.adjoint() * generator * point.rho_factor;
}

SkewHermitianMatrix assemble_normal_direction(
    const CriticalPoint& point, const std::vector<HessianEigenvector>& vectors,
    const std::vector<double>& coefficients) {
  if (vectors.size() != coefficients.size()) {
    throw InvalidInput("assemble_normal_direction: coefficient count mismatch");
  }
  const int n = point.pairing.size();
  ComplexMatrix tilde = ComplexMatrix::Zero(n, n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (size_t v = 0; v < vectors.size(); ++v) {
    const auto& vec = vectors[v];
    const double c = coefficients[v] * inv_sqrt2;
    if (vec.imag_sym) {
      tilde(vec.j, vec.k) += Complex(0, c);
      tilde(vec.k, vec.j) += Complex(0, c);
    } else {
      tilde(vec.j, vec.k) += Complex(c, 0);
      tilde(vec.k, vec.j) += Complex(-c, 0);
    }
  }
  return from_tilde_frame(point, tilde);
}

std::vector<double> f_along_normal(const LandscapeSpec& spec,
                                   const CriticalPoint& point,
                                   const SkewHermitianMatrix& a,
                                   const std::vector<double>& grid,
                                   double normality_tol) {
  check_dimension(spec, a, "f_along_normal");
  const int n = spec.dim();
  if (std::abs(hs_norm(a) - 1.0) > 1e-8) {
    throw InvalidInput("f_along_normal: direction must have unit HS norm");
  }
  if (!is_skew_hermitian(a, 1e-10)) {
    throw InvalidInput("f_along_normal: direction must be skew-Hermitian");
  }
  // Normality: in the tilde frame the normal span is exactly the set of
  // matrix positions (j,k) whose rho blocks and paired obs blocks both
  // differ.  Everything else must vanish.
  const ComplexMatrix tilde = to_tilde_frame(point, a);
  double off2 = 0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const bool normal_pos =
          j != k && spec.rho_block_of(j) != spec.rho_block_of(k) &&
          spec.obs_block_of(point.pairing(j)) != spec.obs_block_of(point.pairing(k));
      if (!normal_pos) off2 += std::norm(tilde(j, k));
    }
  }
  if (std::sqrt(off2) > normality_tol) {
    throw InvalidInput("f_along_normal: direction is not normal to the critical "
                       "submanifold (residual " + std::to_string(std::sqrt(off2)) + ")");
  }

  // exp(-sA) M exp(sA) via one eigendecomposition of iA: with A = Q D Q†,
  // D = -i theta, the conjugation is a phase twist of B = Q† M Q.
  const HermitianEig eig = hermitian_eig(Complex(0, 1) * a, 1.0);
  const ComplexMatrix m = conjugated_obs(spec, point.u);
  const ComplexMatrix b = eig.vectors.adjoint() * m * eig.vectors;

  std::vector<double> out;
  out.reserve(grid.size());
  ComplexMatrix twisted(n, n), back(n, n);
  for (double s : grid) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        twisted(p, q) = b(p, q) * std::exp(Complex(0, s * (eig.values[p] - eig.values[q])));
      }
    }
    back.noalias() = eig.vectors * twisted * eig.vectors.adjoint();
    out.push_back(commutator_with_rho_norm2(back, spec.rho_full()));
  }
  return out;
}

double conjecture_floor(double beta_min, double s) {
  const double sine = std::sin(std::sqrt(2.0) * s);
  return 0.5 * beta_min * beta_min * sine * sine;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2) throw InvalidInput("uniform_grid: need at least two points");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  return grid;
}

}  // namespace landscape
