#include "landscape/curvature.hpp"

#include <cmath>

namespace landscape {

namespace {

bool normal_position(const LandscapeSpec& spec, const PairingPermutation& pairing,
                     int j, int k) {
  return j != k && spec.rho_block_of(j) != spec.rho_block_of(k) &&
         spec.obs_block_of(pairing(j)) != spec.obs_block_of(pairing(k));
}

ComplexMatrix pair_vector(int n, int j, int k, bool imag_sym) {
  ComplexMatrix y = ComplexMatrix::Zero(n, n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (imag_sym) {
    y(j, k) = Complex(0, inv_sqrt2);
    y(k, j) = Complex(0, inv_sqrt2);
  } else {
    y(j, k) = Complex(inv_sqrt2, 0);
    y(k, j) = Complex(-inv_sqrt2, 0);
  }
  return y;
}

void check_point(const LandscapeSpec& spec, const CriticalSubmanifold& sub,
                 const CriticalPoint& point) {
  if (point.pairing.map() != sub.pairing.map()) {
    throw InvalidInput("curvature: point does not belong to the submanifold");
  }
  const double g = grad_norm(spec, point.u);
  if (g > tol::kCritical) {
    throw InvalidInput("curvature: point is not critical (||grad|| = " +
                       std::to_string(g) + ")");
  }
}

ComplexMatrix project_normal(const LandscapeSpec& spec, const PairingPermutation& pairing,
                             const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (normal_position(spec, pairing, j, k)) out(j, k) = m(j, k);
    }
  }
  return out;
}

double sff_sign(const FrameVector& x) {
  if (x.category == 3) {
    throw InvalidInput("second_fundamental_form: first argument is not tangent");
  }
  return x.category == 1 ? -0.5 : 0.5;
}

}  // namespace

TangentBasis tangent_basis(const LandscapeSpec& spec, const CriticalSubmanifold& sub,
                           const CriticalPoint& point) {
  check_point(spec, sub, point);
  const int n = spec.dim();
  TangentBasis basis;
  for (int l = 0; l < n; ++l) {
    ComplexMatrix y = ComplexMatrix::Zero(n, n);
    y(l, l) = Complex(0, 1);
    basis.both.push_back({std::move(y), l, l, false, 2});
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const bool rho_same = spec.rho_block_of(j) == spec.rho_block_of(k);
      const bool obs_same =
          spec.obs_block_of(point.pairing(j)) == spec.obs_block_of(point.pairing(k));
      int category;
      if (rho_same && obs_same) category = 2;
      else if (obs_same) category = 0;
      else if (rho_same) category = 1;
      else category = 3;
      auto& bucket = category == 0   ? basis.obs_only
                     : category == 1 ? basis.rho_only
                     : category == 2 ? basis.both
                                     : basis.normal;
      bucket.push_back({pair_vector(n, j, k, true), j, k, true, category});
      bucket.push_back({pair_vector(n, j, k, false), j, k, false, category});
    }
  }
  return basis;
}

ComplexMatrix ambient_vector(const CriticalPoint& point, const FrameVector& vec) {
  return point.u * from_tilde_frame(point, vec.tilde);
}

ComplexMatrix second_fundamental_form(const LandscapeSpec& spec,
                                      const CriticalSubmanifold& sub,
                                      const CriticalPoint& point,
                                      const FrameVector& x, const FrameVector& y) {
  check_point(spec, sub, point);
  if (y.category == 3) {
    throw InvalidInput("second_fundamental_form: second argument is not tangent");
  }
  const double sign = sff_sign(x);
  const ComplexMatrix normal_part =
      project_normal(spec, point.pairing, sign * commutator(x.tilde, y.tilde));
  return point.u * from_tilde_frame(point, normal_part);
}

RealVector ShapeOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("shape_operator: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double ShapeOperator::trace_abs() const { return std::abs(matrix.trace()); }

double ShapeOperator::off_block_residual() const {
  const int a = n_obs_only, b = n_rho_only;
  const int d = static_cast<int>(matrix.rows());
  double worst = 0;
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      const bool permitted = (p < a && q >= a && q < a + b) ||
                             (q < a && p >= a && p < a + b);
      if (!permitted) worst = std::max(worst, std::abs(matrix(p, q)));
    }
  }
  return worst;
}

ShapeOperator shape_operator(const LandscapeSpec& spec, const CriticalSubmanifold& sub,
                             const CriticalPoint& point, const ComplexMatrix& z_ambient) {
  check_point(spec, sub, point);
  const ComplexMatrix z_tilde = to_tilde_frame(point, point.u.adjoint() * z_ambient);
  if (std::abs(hs_norm(z_tilde) - 1.0) > 1e-8) {
    throw InvalidInput("shape_operator: normal direction must have unit HS norm");
  }
  if (skewness_error(z_tilde) > 1e-8) {
    throw InvalidInput("shape_operator: normal direction must be skew-Hermitian");
  }
  if ((z_tilde - project_normal(spec, point.pairing, z_tilde)).norm() > tol::kNormality) {
    throw InvalidInput("shape_operator: direction is not normal to the submanifold");
  }

  TangentBasis basis = tangent_basis(spec, sub, point);
  std::vector<const FrameVector*> ordered;
  for (const auto& v : basis.obs_only) ordered.push_back(&v);
  for (const auto& v : basis.rho_only) ordered.push_back(&v);
  for (const auto& v : basis.both) ordered.push_back(&v);

  const int d = static_cast<int>(ordered.size());
  ShapeOperator op;
  op.n_obs_only = static_cast<int>(basis.obs_only.size());
  op.n_rho_only = static_cast<int>(basis.rho_only.size());
  op.n_both = static_cast<int>(basis.both.size());
  op.matrix.resize(d, d);
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      // <A_Z X_p, X_q> = <S(X_p, X_q), Z>; the inner product against the
      // normal Z picks out the normal component by itself.
      op.matrix(p, q) = sff_sign(*ordered[p]) *
                        hs_inner(commutator(ordered[p]->tilde, ordered[q]->tilde), z_tilde);
    }
  }
  return op;
}

double mean_curvature_norm(const LandscapeSpec& spec, const CriticalSubmanifold& sub,
                           const CriticalPoint& point) {
  TangentBasis basis = tangent_basis(spec, sub, point);
  const int n = spec.dim();
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  auto add = [&](const FrameVector& v) {
    acc += project_normal(spec, point.pairing,
                          sff_sign(v) * commutator(v.tilde, v.tilde));
  };
  for (const auto& v : basis.obs_only) add(v);
  for (const auto& v : basis.rho_only) add(v);
  for (const auto& v : basis.both) add(v);
  return hs_norm(acc);
}

ComplexMatrix random_unit_normal(const CriticalPoint& point, const TangentBasis& basis,
                                 RandomStream& stream) {
  if (basis.normal.empty()) {
    throw InvalidInput("random_unit_normal: the normal space is zero-dimensional");
  }
  const int n = point.pairing.size();
  ComplexMatrix z = ComplexMatrix::Zero(n, n);
  for (const auto& v : basis.normal) z += stream.normal() * v.tilde;
  const double norm = hs_norm(z);
  if (norm == 0) return random_unit_normal(point, basis, stream);
  z /= norm;
  return point.u * from_tilde_frame(point, z);
}

}  // namespace landscape
