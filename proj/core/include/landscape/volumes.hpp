#pragma once

#include <span>

#include "landscape/submanifolds.hpp"

namespace landscape {

// Overflow-safe positive quantity (2pi)^{two_pi_numerator/2} * exp(residual).
// The 2pi exponent is kept as an exact half-integer so that group-volume
// identities hold to 1e-12 in the log domain even at dimensions where the
// linear value overflows any fixed-width float.
class LogVolume {
 public:
  LogVolume() = default;  // value 1

  static LogVolume from_log(double log_value);
  static LogVolume from_factor(double positive_factor);
  // (2pi)^{numerator/2}
  static LogVolume two_pi_power_half(std::int64_t numerator);

  LogVolume& operator*=(const LogVolume& other);
  LogVolume& operator/=(const LogVolume& other);
  friend LogVolume operator*(LogVolume a, const LogVolume& b) { return a *= b; }
  friend LogVolume operator/(LogVolume a, const LogVolume& b) { return a /= b; }

  std::int64_t two_pi_numerator() const { return two_pi_num_; }
  double residual_log() const { return log_residual_; }

  double log_value() const;    // natural log
  double log10_value() const;
  double value() const;        // +inf / 0 on overflow / underflow

 private:
  std::int64_t two_pi_num_ = 0;
  double log_residual_ = 0.0;
};

// log n! with exact zeros for n <= 1.
double log_factorial(long long n);
// log(0! 1! ... (n-1)!), the factorial product entering the group volume.
double log_superfactorial(long long n);

// Volume of the odd sphere S^{2s+1} = 2 pi^{s+1} / s!.
LogVolume vol_odd_sphere(int s);

// Chevalley fundamental-cell volume 2^{(sum a_l² - abar)/2} for
// U(a_1) ⊕ ... ⊕ U(a_b).
LogVolume chevalley_cell_volume(std::span<const int> mults);

// Hilbert-Schmidt volume of U(a_1) ⊕ ... ⊕ U(a_b):
// (2pi)^{(sum a_l² + abar)/2} / prod_l prod_{s<a_l} s!.
// Cross-checked in tests against the cell volume times the odd-sphere
// product.  Zero entries are rejected; filter them out (U(0) is trivial).
LogVolume vol_unitary_product(std::span<const int> mults);
LogVolume vol_unitary_group(int n);

// Hilbert-Schmidt volume of the critical orbit: the quotient
// Vol(U(m) ⊕ U(n)) / Vol(U(K)), in closed form
// (2pi)^{(d+N)/2} prod_cells prod r! / (prod_i prod p! prod_j prod q!).
LogVolume vol_orbit(const LandscapeSpec& spec, const CriticalSubmanifold& sub);

// Leading-order near-critical volume fraction coefficient * eps^power with
// power = N² - d.  evaluate() works in the log domain, so huge powers
// underflow gracefully to zero.
struct VolFracEstimate {
  LogVolume coefficient;
  long long epsilon_power = 0;

  double log_at(double eps) const;
  double log10_at(double eps) const;
  double evaluate(double eps) const;
};

// Ellipsoidal-tube estimate: coefficient
// [2^{m/2} Gamma(m/2+1) prod|beta_i|]^{-1} * prod s! prod r! / (prod p! prod q!)
// with m = N² - d and the beta product over all m nonzero Hessian
// eigenvalues with multiplicity.  Throws InvalidInput when the codimension
// is zero (landscape constant on U(N): no near-critical estimate).
VolFracEstimate volfrac_estimate(const LandscapeSpec& spec,
                                 const CriticalSubmanifold& sub);

// Spherical-tube upper bound: same shape with prod|beta_i| replaced by
// |beta_min|^m.  Always >= the estimate, with equality exactly when every
// |beta_i| equals |beta_min|.
VolFracEstimate spherical_tube_coefficient(const LandscapeSpec& spec,
                                           const CriticalSubmanifold& sub);
double spherical_tube_bound(const LandscapeSpec& spec,
                            const CriticalSubmanifold& sub, double eps);

}  // namespace landscape
