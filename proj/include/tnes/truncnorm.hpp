#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tnes/probability.hpp"

namespace tnes {

// theta = (mu, sigma, tau_l, tau_u): a N(mu, sigma^2) parent restricted to
// [tau_l, tau_u]. Construction validates; an existing object is always usable.
class TnParams {
 public:
  TnParams(double mu, double sigma, double tau_l, double tau_u);

  double mu() const noexcept { return mu_; }
  double sigma() const noexcept { return sigma_; }
  double tau_l() const noexcept { return tau_l_; }
  double tau_u() const noexcept { return tau_u_; }
  double tau_l_star() const noexcept { return l_star_; }
  double tau_u_star() const noexcept { return u_star_; }

  bool operator==(const TnParams&) const = default;

 private:
  double mu_, sigma_, tau_l_, tau_u_;
  double l_star_, u_star_;
};

struct StdMoments {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  double alpha4 = 0.0;
};

// Log-likelihood, or the marker for "some observation has zero density".
class LogLikelihood {
 public:
  static LogLikelihood of(double v) { return LogLikelihood(false, v); }
  static LogLikelihood minus_infinity() { return LogLikelihood(true, 0.0); }

  bool is_minus_infinity() const noexcept { return minus_inf_; }
  // Throws InvariantError on the marker.
  double value() const;

 private:
  LogLikelihood(bool minus_inf, double v) : minus_inf_(minus_inf), value_(v) {}
  bool minus_inf_;
  double value_;
};

double density(const TnParams& theta, double x);
double log_density(const TnParams& theta, double x);  // -inf outside the support
Probability cdf(const TnParams& theta, double x);
double quantile(const TnParams& theta, Probability p);

// Quantile of the standard truncated normal TN(0, 1, l, u), l < u.
double std_tn_quantile(double l, double u, double p);

// n draws by inversion, sorted ascending. Same seed, same vector.
std::vector<double> sample(const TnParams& theta, std::size_t n, std::uint64_t seed);

LogLikelihood log_likelihood(const TnParams& theta, std::span<const double> data);

StdMoments std_moments(double tau_l_star, double tau_u_star);

}  // namespace tnes
