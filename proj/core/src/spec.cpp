#include "landscape/spec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace landscape {

namespace {

void validate_side(const char* name, const std::vector<double>& values,
                   const std::vector<int>& mults) {
  if (values.empty()) {
    throw InvalidInput(std::string(name) + ".values: at least one eigenvalue required");
  }
  if (values.size() != mults.size()) {
    throw InvalidInput(std::string(name) +
                       ".multiplicities: length differs from " + name + ".values");
  }
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    if (!(values[i] > values[i + 1])) {
      throw InvalidInput(std::string(name) +
                         ".values: must be strictly decreasing and distinct");
    }
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InvalidInput(std::string(name) + ".values: entries must be finite");
    }
    if (mults[i] < 1) {
      throw InvalidInput(std::string(name) + ".multiplicities: entries must be positive");
    }
  }
}

void expand_side(const std::vector<double>& values, const std::vector<int>& mults,
                 std::vector<double>& full, std::vector<int>& block_of,
                 std::vector<int>& offsets) {
  offsets.clear();
  full.clear();
  block_of.clear();
  int cursor = 0;
  for (size_t b = 0; b < values.size(); ++b) {
    offsets.push_back(cursor);
    for (int t = 0; t < mults[b]; ++t) {
      full.push_back(values[b]);
      block_of.push_back(static_cast<int>(b));
      ++cursor;
    }
  }
}

void append_formatted(std::string& out, const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  out += buf;
}

}  // namespace

LandscapeSpec::LandscapeSpec(std::vector<double> rho_values, std::vector<int> rho_mults,
                             std::vector<double> obs_values, std::vector<int> obs_mults)
    : rho_values_(std::move(rho_values)),
      obs_values_(std::move(obs_values)),
      rho_mults_(std::move(rho_mults)),
      obs_mults_(std::move(obs_mults)) {
  validate_side("rho", rho_values_, rho_mults_);
  validate_side("obs", obs_values_, obs_mults_);
  const int rho_dim = std::accumulate(rho_mults_.begin(), rho_mults_.end(), 0);
  const int obs_dim = std::accumulate(obs_mults_.begin(), obs_mults_.end(), 0);
  if (rho_dim != obs_dim) {
    throw InvalidInput("rho.multiplicities sum (" + std::to_string(rho_dim) +
                       ") differs from obs.multiplicities sum (" +
                       std::to_string(obs_dim) + ")");
  }
  dim_ = rho_dim;
  expand_side(rho_values_, rho_mults_, rho_full_, rho_block_of_, rho_offsets_);
  expand_side(obs_values_, obs_mults_, obs_full_, obs_block_of_, obs_offsets_);
}

std::pair<std::vector<double>, std::vector<int>> LandscapeSpec::group_eigenvalues(
    std::vector<double> eigenvalues, double rel_tol) {
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<double>());
  std::vector<double> values;
  std::vector<int> mults;
  for (double v : eigenvalues) {
    if (!values.empty() &&
        std::abs(values.back() - v) <=
            rel_tol * std::max({1.0, std::abs(values.back()), std::abs(v)})) {
      ++mults.back();
    } else {
      values.push_back(v);
      mults.push_back(1);
    }
  }
  return {std::move(values), std::move(mults)};
}

LandscapeSpec LandscapeSpec::from_eigenvalues(const std::vector<double>& rho_eigs,
                                              const std::vector<double>& obs_eigs,
                                              double rel_tol) {
  auto [rv, rm] = group_eigenvalues(rho_eigs, rel_tol);
  auto [ov, om] = group_eigenvalues(obs_eigs, rel_tol);
  return LandscapeSpec(std::move(rv), std::move(rm), std::move(ov), std::move(om));
}

ComplexMatrix LandscapeSpec::rho_matrix() const {
  ComplexMatrix m = ComplexMatrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) m(i, i) = rho_full_[i];
  return m;
}

ComplexMatrix LandscapeSpec::obs_matrix() const {
  ComplexMatrix m = ComplexMatrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) m(i, i) = obs_full_[i];
  return m;
}

std::string LandscapeSpec::summary() const {
  std::string out = "rho=";
  for (size_t i = 0; i < rho_values_.size(); ++i) {
    if (i) out += ",";
    append_formatted(out, "%.17g", rho_values_[i]);
    out += "*" + std::to_string(rho_mults_[i]);
  }
  out += "|obs=";
  for (size_t j = 0; j < obs_values_.size(); ++j) {
    if (j) out += ",";
    append_formatted(out, "%.17g", obs_values_[j]);
    out += "*" + std::to_string(obs_mults_[j]);
  }
  return out;
}

std::uint64_t LandscapeSpec::hash() const {
  const std::string text = summary();
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string LandscapeSpec::hash_hex() const {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash()));
  return buf;
}

}  // namespace landscape
