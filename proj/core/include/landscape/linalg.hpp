#pragma once

#include "landscape/rng.hpp"
#include "landscape/types.hpp"

namespace landscape {

// Real Hilbert-Schmidt inner product Re Tr(X†Y).  This convention makes the
// diagonal lattice vectors i|l><l| unit norm and the off-diagonal root
// combinations norm sqrt(2).  Throws InvalidInput on shape mismatch.
double hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);
double hs_norm(const ComplexMatrix& x);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Residual predicates backing the matrix aliases in types.hpp.
double unitarity_error(const ComplexMatrix& u);        // ||U†U - I||_HS
double hermiticity_error(const ComplexMatrix& h);      // ||H - H†||_HS
double skewness_error(const ComplexMatrix& x);         // ||X + X†||_HS

bool is_unitary(const ComplexMatrix& u, double tol = tol::kUnitary);
bool is_skew_hermitian(const ComplexMatrix& x, double tol = tol::kSkew);

struct HermitianEig {
  RealVector values;       // descending
  UnitaryMatrix vectors;   // columns; H = V diag(values) V†
};

// Dense Hermitian eigendecomposition with descending eigenvalues.
// Reconstruction and orthonormality residuals stay below 1e-10 * ||H||.
// Throws InvalidInput if H is not Hermitian within tol * ||H||,
// NumericalFailure if the solver does not converge.
HermitianEig hermitian_eig(const ComplexMatrix& h, double tol = tol::kHermitian);

// exp(X) for skew-Hermitian X, computed by diagonalizing the Hermitian
// matrix iX and exponentiating the phases, so the result is unitary to
// round-off by construction.
UnitaryMatrix expm_skew(const SkewHermitianMatrix& x, double tol = tol::kSkew);

// Haar-distributed unitary: QR of a complex standard-Gaussian matrix with
// the R diagonal rephased to be real positive.  The rephasing is what makes
// the distribution exactly Haar rather than merely left-invariant.
UnitaryMatrix haar_unitary(int n, RandomStream& stream);

// Gaussian skew-Hermitian direction, normalized to unit HS norm.
SkewHermitianMatrix random_skew(int n, RandomStream& stream);

}  // namespace landscape
