#pragma once

#include <vector>

#include "landscape/linalg.hpp"
#include "landscape/tables.hpp"

namespace landscape {

// J(U) = Tr(U rho U† O) with rho, O diagonal descending.
double eval_J(const LandscapeSpec& spec, const UnitaryMatrix& u);

// grad J(U) = U [U†OU, rho], returned as the ambient tangent vector at U.
ComplexMatrix grad_J(const LandscapeSpec& spec, const UnitaryMatrix& u);

// ||grad J(U)||_HS = ||[U†OU, rho]||_HS without forming the full gradient.
double grad_norm(const LandscapeSpec& spec, const UnitaryMatrix& u);

// Hessian operator at a critical point applied to the tangent vector U X:
// Hess(UX) = U [[U†OU, X], rho].  X is the skew-Hermitian generator.
// Throws InvalidInput unless ||grad J(U)|| <= critical_tol.
ComplexMatrix hess_apply(const LandscapeSpec& spec, const UnitaryMatrix& u,
                         const SkewHermitianMatrix& x,
                         double critical_tol = tol::kCritical);

// Hessian eigenvalues at a critical point with pairing pi:
// beta_jk = -(lambda_j - lambda_k)(sigma_{pi(j)} - sigma_{pi(k)}) with
// multiplicity 2 per unordered pair j < k.  Zero eigenvalues are classified
// structurally (equal blocks), so zero_multiplicity equals the submanifold
// dimension exactly.
struct HessianSpectrum {
  struct Line {
    double beta;
    long long multiplicity;
  };
  std::vector<Line> lines;        // nonzero eigenvalues, ascending in beta
  long long zero_multiplicity = 0;
  double beta_min = 0.0;          // smallest nonzero |beta|; 0 if none

  long long nonzero_count() const;
  double log_abs_product() const;         // sum of mult * log|beta|
  bool all_abs_equal(double rel_tol = 1e-12) const;
};

HessianSpectrum hessian_spectrum(const LandscapeSpec& spec,
                                 const PairingPermutation& pairing);

// Tilde-frame descriptor of one Hessian eigenvector with nonzero eigenvalue:
// Ytilde = (i/sqrt2)(|j><k| + |k><j|) when imag_sym, else
// (1/sqrt2)(|j><k| - |k><j|), with j < k.
struct HessianEigenvector {
  int j, k;
  bool imag_sym;
  double beta;
};

std::vector<HessianEigenvector> nonzero_hessian_eigenvectors(
    const LandscapeSpec& spec, const PairingPermutation& pairing);

ComplexMatrix eigenvector_tilde(const HessianEigenvector& vec, int n);

// A point of the critical submanifold indexed by a contingency table,
// factored as U = V P W† with V block-diagonal over the observable
// multiplicities, W block-diagonal over the rho multiplicities, and P the
// canonical permutation matrix.  The W factor is kept because tangent and
// normal vectors live in the frame it defines: the ambient vector for a
// tilde matrix Ytilde is U (W Ytilde W†).
struct CriticalPoint {
  UnitaryMatrix u;
  UnitaryMatrix obs_factor;   // V
  UnitaryMatrix rho_factor;   // W
  PairingPermutation pairing;
};

// Haar-random point on the submanifold of the given table:
// ||grad J|| <= 1e-9 and J equals the table's critical value to 1e-10.
CriticalPoint random_critical_point(const LandscapeSpec& spec,
                                    const ContingencyTable& table,
                                    RandomStream& stream);

// W Ytilde W†: the skew generator whose ambient tangent vector at U is
// U (W Ytilde W†).
ComplexMatrix from_tilde_frame(const CriticalPoint& point, const ComplexMatrix& tilde);
ComplexMatrix to_tilde_frame(const CriticalPoint& point, const ComplexMatrix& generator);

// Normal direction sum_v coeff_v * eigenvector_v mapped out of the tilde
// frame; not normalized.
SkewHermitianMatrix assemble_normal_direction(
    const CriticalPoint& point, const std::vector<HessianEigenvector>& vectors,
    const std::vector<double>& coefficients);

// f(s) = ||grad J(U exp(sA))||² = ||[exp(-sA) U†OU exp(sA), rho]||²_HS for a
// unit-norm skew generator A normal to the critical submanifold at the
// point.  Throws InvalidInput if A is not unit norm or has a component of
// more than normality_tol along the zero-eigenvalue directions.
std::vector<double> f_along_normal(const LandscapeSpec& spec,
                                   const CriticalPoint& point,
                                   const SkewHermitianMatrix& a,
                                   const std::vector<double>& grid,
                                   double normality_tol = tol::kNormality);

// beta_min² sin²(sqrt2 s)/2, the conjectured geodesic floor for f.
double conjecture_floor(double beta_min, double s);

std::vector<double> uniform_grid(double lo, double hi, int points);

}  // namespace landscape
