#include "tnes/truncnorm.hpp"

#include <algorithm>
#include <cmath>

#include "tnes/errors.hpp"
#include "tnes/kernels.hpp"
#include "tnes/rng.hpp"
#include "tnes/specfns.hpp"

namespace tnes {

TnParams::TnParams(double mu, double sigma, double tau_l, double tau_u)
    : mu_(mu), sigma_(sigma), tau_l_(tau_l), tau_u_(tau_u) {
  if (!std::isfinite(mu) || !std::isfinite(sigma) || !std::isfinite(tau_l) ||
      !std::isfinite(tau_u)) {
    throw ParameterError("truncated normal parameters must be finite");
  }
  if (!(sigma > 0.0)) throw ParameterError("sigma must be positive");
  if (!(tau_l < tau_u)) throw ParameterError("need tau_l < tau_u");
  l_star_ = (tau_l - mu) / sigma;
  u_star_ = (tau_u - mu) / sigma;
  if (!std::isfinite(l_star_) || !std::isfinite(u_star_) || !(l_star_ < u_star_)) {
    throw ParameterError("standardized bounds are not finite and ordered");
  }
}

double LogLikelihood::value() const {
  if (minus_inf_) throw InvariantError("log-likelihood is the minus-infinity marker");
  return value_;
}

namespace {

double log_mass(const TnParams& t) { return log_normal_mass(t.tau_l_star(), t.tau_u_star()); }

double quantile_lower_side(double l, double u, double p) {
  const double arg = std_normal_cdf(l) + p * normal_mass(l, u);
  if (arg <= 0.0) return l;
  if (arg >= 1.0) return u;
  return std::clamp(std_normal_quantile(arg), l, u);
}

}  // namespace

double std_tn_quantile(double l, double u, double p) {
  if (!(l < u)) throw DomainError("std_tn_quantile: need l < u");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("std_tn_quantile: p outside [0, 1]");
  if (p == 0.0) return l;
  if (p == 1.0) return u;
  // Work in whichever tail keeps Phi(l) away from 1.
  if (l > 0.0) return -quantile_lower_side(-u, -l, 1.0 - p);
  return quantile_lower_side(l, u, p);
}

double log_density(const TnParams& theta, double x) {
  if (!(x >= theta.tau_l() && x <= theta.tau_u())) return -INFINITY;
  const double z = (x - theta.mu()) / theta.sigma();
  return -0.5 * z * z - kLogSqrt2Pi - std::log(theta.sigma()) - log_mass(theta);
}

double density(const TnParams& theta, double x) {
  if (!(x >= theta.tau_l() && x <= theta.tau_u())) return 0.0;
  return std::exp(log_density(theta, x));
}

Probability cdf(const TnParams& theta, double x) {
  if (std::isnan(x)) throw DomainError("cdf: NaN argument");
  if (x <= theta.tau_l()) return Probability(0.0);
  if (x >= theta.tau_u()) return Probability(1.0);
  const double z = (x - theta.mu()) / theta.sigma();
  const double l = theta.tau_l_star();
  const double u = theta.tau_u_star();
  double v;
  if (l > 0.0) {
    v = 1.0 - normal_mass(z, u) / normal_mass(l, u);
  } else {
    v = normal_mass(l, z) / normal_mass(l, u);
  }
  return Probability(std::clamp(v, 0.0, 1.0));
}

double quantile(const TnParams& theta, Probability p) {
  if (p == 0.0) return theta.tau_l();
  if (p == 1.0) return theta.tau_u();
  const double z = std_tn_quantile(theta.tau_l_star(), theta.tau_u_star(), p);
  return std::clamp(theta.mu() + theta.sigma() * z, theta.tau_l(), theta.tau_u());
}

std::vector<double> sample(const TnParams& theta, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample: n must be at least 1");
  Engine eng(seed);
  std::vector<double> out(n);
  for (double& v : out) v = quantile(theta, Probability(uniform_open(eng)));
  std::sort(out.begin(), out.end());
  return out;
}

LogLikelihood log_likelihood(const TnParams& theta, std::span<const double> data) {
  if (data.empty()) throw DomainError("log_likelihood: empty data");
  for (double x : data) {
    if (!(x >= theta.tau_l() && x <= theta.tau_u())) return LogLikelihood::minus_infinity();
  }
  const double n = static_cast<double>(data.size());
  const double ss = kernels::sum_sq_standardized(data, theta.mu(), theta.sigma());
  return LogLikelihood::of(-0.5 * ss - n * (kLogSqrt2Pi + std::log(theta.sigma()) + log_mass(theta)));
}

StdMoments std_moments(double l, double u) {
  if (!std::isfinite(l) || !std::isfinite(u) || !(l < u)) {
    throw DomainError("std_moments: need finite l < u");
  }
  // phi(x) / D evaluated in log space so that far-tail intervals keep their ratios.
  const double log_d = log_normal_mass(l, u);
  const double rl = std::exp(-0.5 * l * l - kLogSqrt2Pi - log_d);
  const double ru = std::exp(-0.5 * u * u - kLogSqrt2Pi - log_d);
  const double d0 = ru - rl;                                      // (phi(u) - phi(l)) / D
  const double d1 = -u * ru + l * rl;                             // phi' difference / D
  const double d2 = (u * u - 1.0) * ru - (l * l - 1.0) * rl;      // phi''
  const double d3 = (3.0 * u - u * u * u) * ru - (3.0 * l - l * l * l) * rl;  // phi'''
  StdMoments m;
  m.alpha1 = -d0;
  m.alpha2 = 1.0 + d1;
  m.alpha3 = -3.0 * d0 - d2;
  m.alpha4 = 3.0 + 6.0 * d1 + d3;
  return m;
}

}  // namespace tnes
