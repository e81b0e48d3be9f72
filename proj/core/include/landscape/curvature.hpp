#pragma once

#include "landscape/submanifolds.hpp"

namespace landscape {

// Basis vector of the tangent or normal space at a critical point, held in
// the tilde frame (conjugate by W to get the ambient generator).  The
// support is the pair (j, k) with j < k, or the diagonal entry j == k.
struct FrameVector {
  ComplexMatrix tilde;
  int j = 0, k = 0;
  bool imag_sym = false;

  // 0: U†X commutes with U†OU only (same obs block, different rho blocks)
  // 1: U†X commutes with rho only
  // 2: U†X commutes with both (diagonal entries and same-cell pairs)
  // 3: normal (commutes with neither)
  int category = 0;
};

// Orthonormal tangent basis split by commutation category, plus the normal
// basis.  Category sizes are sum m_j² - sum k_ij², sum n_i² - sum k_ij²,
// sum k_ij²; the normal count is N² - d.
struct TangentBasis {
  std::vector<FrameVector> obs_only;   // category 0
  std::vector<FrameVector> rho_only;   // category 1
  std::vector<FrameVector> both;       // category 2
  std::vector<FrameVector> normal;     // category 3

  long long tangent_count() const {
    return static_cast<long long>(obs_only.size() + rho_only.size() + both.size());
  }
};

// Throws InvalidInput unless the point is critical within tol::kCritical.
TangentBasis tangent_basis(const LandscapeSpec& spec, const CriticalSubmanifold& sub,
                           const CriticalPoint& point);

// Ambient tangent vector of a frame vector: U (W Ytilde W†).
ComplexMatrix ambient_vector(const CriticalPoint& point, const FrameVector& vec);

// Second fundamental form S(X, Y) at the point, returned as the ambient
// normal vector.  In the tilde frame this is the normal component of
// ±(1/2)[Xtilde, Ytilde]: + when X commutes with U†OU, - when with rho,
// zero either way when X and Y share a category.
ComplexMatrix second_fundamental_form(const LandscapeSpec& spec,
                                      const CriticalSubmanifold& sub,
                                      const CriticalPoint& point,
                                      const FrameVector& x, const FrameVector& y);

// Shape operator A_Z on the tangent space, represented in the basis order
// obs_only | rho_only | both.  Symmetric with block pattern
// [[0, B, 0], [Bᵀ, 0, 0], [0, 0, 0]]; eigenvalues come in ±eta pairs.
struct ShapeOperator {
  RealMatrix matrix;
  int n_obs_only = 0, n_rho_only = 0, n_both = 0;

  RealVector eigenvalues() const;       // ascending
  double trace_abs() const;
  // Largest entry outside the permitted off-diagonal blocks.
  double off_block_residual() const;
};

// Z is the ambient normal vector (unit HS norm); validated against the
// basis before use.
ShapeOperator shape_operator(const LandscapeSpec& spec, const CriticalSubmanifold& sub,
                             const CriticalPoint& point, const ComplexMatrix& z_ambient);

// || sum_i S(X_i, X_i) ||_HS over the tangent basis; minimality of the
// critical submanifolds makes this vanish.
double mean_curvature_norm(const LandscapeSpec& spec, const CriticalSubmanifold& sub,
                           const CriticalPoint& point);

// Uniform direction on the unit sphere of the normal space (Gaussian
// coefficients on the normal basis, normalized), as an ambient vector.
ComplexMatrix random_unit_normal(const CriticalPoint& point, const TangentBasis& basis,
                                 RandomStream& stream);

}  // namespace landscape
