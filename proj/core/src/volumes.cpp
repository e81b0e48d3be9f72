#include "landscape/volumes.hpp"

#include <cmath>

namespace landscape {

namespace {

const double kLog2Pi = std::log(2.0 * M_PI);
const double kLog2 = std::log(2.0);

}  // namespace

LogVolume LogVolume::from_log(double log_value) {
  LogVolume v;
  v.log_residual_ = log_value;
  return v;
}

LogVolume LogVolume::from_factor(double positive_factor) {
  if (!(positive_factor > 0)) throw InvalidInput("LogVolume: factor must be positive");
  return from_log(std::log(positive_factor));
}

LogVolume LogVolume::two_pi_power_half(std::int64_t numerator) {
  LogVolume v;
  v.two_pi_num_ = numerator;
  return v;
}

LogVolume& LogVolume::operator*=(const LogVolume& other) {
  two_pi_num_ += other.two_pi_num_;
  log_residual_ += other.log_residual_;
  return *this;
}

LogVolume& LogVolume::operator/=(const LogVolume& other) {
  two_pi_num_ -= other.two_pi_num_;
  log_residual_ -= other.log_residual_;
  return *this;
}

double LogVolume::log_value() const {
  return 0.5 * static_cast<double>(two_pi_num_) * kLog2Pi + log_residual_;
}

double LogVolume::log10_value() const { return log_value() / std::log(10.0); }

double LogVolume::value() const { return std::exp(log_value()); }

double log_factorial(long long n) {
  if (n < 0) throw InvalidInput("log_factorial: negative argument");
  if (n <= 1) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_superfactorial(long long n) {
  long double acc = 0.0L;
  for (long long s = 2; s < n; ++s) {
    acc += std::lgamma(static_cast<double>(s) + 1.0);
  }
  return static_cast<double>(acc);
}

LogVolume vol_odd_sphere(int s) {
  if (s < 0) throw InvalidInput("vol_odd_sphere: negative index");
  // 2 pi^{s+1} / s! = (2pi)^{s+1} 2^{-s} / s!
  LogVolume v = LogVolume::two_pi_power_half(2 * (static_cast<std::int64_t>(s) + 1));
  return v * LogVolume::from_log(-s * kLog2 - log_factorial(s));
}

LogVolume chevalley_cell_volume(std::span<const int> mults) {
  long long sq = 0, bar = 0;
  for (int a : mults) {
    if (a < 1) throw InvalidInput("chevalley_cell_volume: multiplicities must be positive");
    sq += static_cast<long long>(a) * a;
    bar += a;
  }
  return LogVolume::from_log(0.5 * static_cast<double>(sq - bar) * kLog2);
}

LogVolume vol_unitary_product(std::span<const int> mults) {
  long long sq = 0, bar = 0;
  long double factorials = 0.0L;
  for (int a : mults) {
    if (a < 1) throw InvalidInput("vol_unitary_product: multiplicities must be positive");
    sq += static_cast<long long>(a) * a;
    bar += a;
    factorials += log_superfactorial(a);
  }
  LogVolume v = LogVolume::two_pi_power_half(sq + bar);
  return v * LogVolume::from_log(-static_cast<double>(factorials));
}

LogVolume vol_unitary_group(int n) {
  const int mults[1] = {n};
  return vol_unitary_product(mults);
}

LogVolume vol_orbit(const LandscapeSpec& spec, const CriticalSubmanifold& sub) {
  long double resid = 0.0L;
  for (int i = 0; i < sub.table.rows(); ++i) {
    for (int j = 0; j < sub.table.cols(); ++j) {
      resid += log_superfactorial(sub.table.at(i, j));
    }
  }
  for (int n : spec.rho_mults()) resid -= log_superfactorial(n);
  for (int m : spec.obs_mults()) resid -= log_superfactorial(m);
  LogVolume v = LogVolume::two_pi_power_half(sub.dim + spec.dim());
  return v * LogVolume::from_log(static_cast<double>(resid));
}

double VolFracEstimate::log_at(double eps) const {
  if (!(eps > 0)) throw InvalidInput("volume fraction: eps must be positive");
  return coefficient.log_value() + static_cast<double>(epsilon_power) * std::log(eps);
}

double VolFracEstimate::log10_at(double eps) const {
  return log_at(eps) / std::log(10.0);
}

double VolFracEstimate::evaluate(double eps) const { return std::exp(log_at(eps)); }

namespace {

// The factorial ratio prod s! prod r! / (prod p! prod q!) common to the
// tube estimate and bound.
double log_factorial_ratio(const LandscapeSpec& spec, const CriticalSubmanifold& sub) {
  long double resid = log_superfactorial(spec.dim());
  for (int i = 0; i < sub.table.rows(); ++i) {
    for (int j = 0; j < sub.table.cols(); ++j) {
      resid += log_superfactorial(sub.table.at(i, j));
    }
  }
  for (int n : spec.rho_mults()) resid -= log_superfactorial(n);
  for (int m : spec.obs_mults()) resid -= log_superfactorial(m);
  return static_cast<double>(resid);
}

VolFracEstimate tube_coefficient(const LandscapeSpec& spec,
                                 const CriticalSubmanifold& sub,
                                 bool use_beta_min) {
  const long long m = sub.codim;
  if (m == 0) {
    throw InvalidInput("volume fraction: codimension 0 (landscape constant on "
                       "U(N)); no near-critical estimate");
  }
  if (sub.spectrum.beta_min <= 0 || sub.spectrum.nonzero_count() != m) {
    throw InvalidInput("volume fraction: Hessian spectrum inconsistent with codimension");
  }
  const double half_m = 0.5 * static_cast<double>(m);
  const double beta_term = use_beta_min
                               ? static_cast<double>(m) * std::log(sub.spectrum.beta_min)
                               : sub.spectrum.log_abs_product();
  const double log_coeff = log_factorial_ratio(spec, sub) - half_m * kLog2 -
                           std::lgamma(half_m + 1.0) - beta_term;
  return VolFracEstimate{LogVolume::from_log(log_coeff), m};
}

}  // namespace

VolFracEstimate volfrac_estimate(const LandscapeSpec& spec,
                                 const CriticalSubmanifold& sub) {
  return tube_coefficient(spec, sub, false);
}

VolFracEstimate spherical_tube_coefficient(const LandscapeSpec& spec,
                                           const CriticalSubmanifold& sub) {
  return tube_coefficient(spec, sub, true);
}

double spherical_tube_bound(const LandscapeSpec& spec,
                            const CriticalSubmanifold& sub, double eps) {
  return spherical_tube_coefficient(spec, sub).evaluate(eps);
}

}  // namespace landscape
