#include "landscape/linalg.hpp"

#include <cmath>
#include <string>

namespace landscape {

double hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw InvalidInput("hs_inner: shape mismatch (" +
                       std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                       " vs " + std::to_string(y.rows()) + "x" +
                       std::to_string(y.cols()) + ")");
  }
  return x.conjugate().cwiseProduct(y).sum().real();
}

double hs_norm(const ComplexMatrix& x) { return x.norm(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

double unitarity_error(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

double hermiticity_error(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) return std::numeric_limits<double>::infinity();
  return (h - h.adjoint()).norm();
}

double skewness_error(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) return std::numeric_limits<double>::infinity();
  return (x + x.adjoint()).norm();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return u.rows() == u.cols() &&
         unitarity_error(u) <= tol * static_cast<double>(u.rows());
}

bool is_skew_hermitian(const ComplexMatrix& x, double tol) {
  return x.rows() == x.cols() &&
         skewness_error(x) <= tol * std::max(1.0, hs_norm(x));
}

HermitianEig hermitian_eig(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) throw InvalidInput("hermitian_eig: matrix not square");
  const double scale = std::max(1.0, hs_norm(h));
  if (hermiticity_error(h) > tol * scale) {
    throw InvalidInput("hermitian_eig: input is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ComplexMatrix(0.5 * (h + h.adjoint())));
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("hermitian_eig: eigensolver did not converge");
  }
  const Eigen::Index n = h.rows();
  HermitianEig out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = solver.eigenvalues()[n - 1 - i];
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

UnitaryMatrix expm_skew(const SkewHermitianMatrix& x, double tol) {
  if (x.rows() != x.cols()) throw InvalidInput("expm_skew: matrix not square");
  if (!is_skew_hermitian(x, tol)) {
    throw InvalidInput("expm_skew: input is not skew-Hermitian within tolerance");
  }
  // iX is Hermitian; X = V diag(-i theta) V† and exp(X) = V diag(e^{-i theta}) V†.
  const ComplexMatrix ix = Complex(0, 1) * x;
  const HermitianEig eig = hermitian_eig(ix, 1.0);  // symmetrized internally
  const Eigen::Index n = x.rows();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    phases[i] = std::exp(Complex(0, -eig.values[i]));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

UnitaryMatrix haar_unitary(int n, RandomStream& stream) {
  if (n < 1) throw InvalidInput("haar_unitary: dimension must be >= 1");
  ComplexMatrix ginibre(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ginibre(i, j) = stream.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ();
  const auto r_diag = qr.matrixQR().diagonal();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r_diag[j]);
    const Complex phase = mag > 0 ? r_diag[j] / mag : Complex(1, 0);
    q.col(j) *= phase;
  }
  return q;
}

SkewHermitianMatrix random_skew(int n, RandomStream& stream) {
  if (n < 1) throw InvalidInput("random_skew: dimension must be >= 1");
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = stream.complex_normal();
  }
  SkewHermitianMatrix x = 0.5 * (g - g.adjoint());
  const double norm = hs_norm(x);
  if (norm > 0) x /= norm;
  return x;
}

}  // namespace landscape
