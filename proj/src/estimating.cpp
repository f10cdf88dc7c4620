#include "tnes/estimating.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tnes/errors.hpp"
#include "tnes/kernels.hpp"
#include "tnes/specfns.hpp"

namespace tnes {

LatentCounts::LatentCounts(double n_l, double n_u) : n_l_(n_l), n_u_(n_u) {
  if (!(n_l >= 0.0) || !(n_u >= 0.0) || !std::isfinite(n_l) || !std::isfinite(n_u)) {
    throw DomainError("latent counts must be finite and nonnegative");
  }
}

double SystemValue::norm() const {
  return std::sqrt(eq_mu * eq_mu + eq_sigma * eq_sigma + eq_tau_l * eq_tau_l +
                   eq_tau_u * eq_tau_u);
}

double xi_weight(std::size_t n, const LatentCounts& counts, std::size_t k) {
  if (n == 0 || k < 1 || k > n) throw DomainError("xi_weight: need 1 <= k <= n");
  const double kk = static_cast<double>(k);
  return normal_score_of_beta_median(counts.n_l() + kk,
                                     counts.n_u() + static_cast<double>(n) + 1.0 - kk);
}

std::vector<double> xi_weights(std::size_t n, const LatentCounts& counts) {
  if (n == 0) throw DomainError("xi_weights: n must be positive");
  std::vector<double> a(n), b(n), out(n);
  const double top = counts.n_u() + static_cast<double>(n) + 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double k = static_cast<double>(i + 1);
    a[i] = counts.n_l() + k;
    b[i] = top - k;
  }
  normal_scores_of_beta_medians(a, b, out);
  return out;
}

LatentCounts latent_expectations(const TnParams& theta, std::size_t n) {
  if (n == 0) throw DomainError("latent_expectations: n must be positive");
  const double l = theta.tau_l_star();
  const double u = theta.tau_u_star();
  const double log_d = log_normal_mass(l, u);
  const double log_n = std::log(static_cast<double>(n));
  auto count = [&](double log_tail) {
    const double c = std::exp(log_n + log_tail - log_d);
    return std::min(c, kMaxLatentCount);
  };
  // 1 - Phi(u) = Phi(-u).
  return LatentCounts(count(std_normal_log_cdf(l)), count(std_normal_log_cdf(-u)));
}

BoundEstimates umvu_bounds(double mu, double sigma, double x_min, double x_max, std::size_t n,
                           double width_cap) {
  if (n < 2) throw DomainError("umvu_bounds: need n >= 2");
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mu)) {
    throw DomainError("umvu_bounds: need finite mu and sigma > 0");
  }
  if (!(x_min <= x_max)) throw DomainError("umvu_bounds: need x_min <= x_max");
  if (!(width_cap > 0.0)) throw DomainError("umvu_bounds: width cap must be positive");
  const double w1 = (x_min - mu) / sigma;
  const double wn = (x_max - mu) / sigma;
  if (!(w1 < wn)) return {x_min, x_max};
  const double log_dphi = log_normal_mass(w1, wn);
  const double nm1 = static_cast<double>(n - 1);
  const double cap = width_cap * sigma;
  // sigma * (Phi(Wn) - Phi(W1)) / ((n - 1) phi(W)), with phi in log form so
  // that it cannot underflow.
  auto correction = [&](double w) {
    const double log_phi = -0.5 * w * w - kLogSqrt2Pi;
    const double c = sigma * std::exp(log_dphi - log_phi) / nm1;
    return std::min(c, cap);
  };
  return {x_min - correction(w1), x_max + correction(wn)};
}

void require_sorted(std::span<const double> data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::isfinite(data[i])) throw ContractError("data must be finite");
    if (i > 0 && data[i] < data[i - 1]) {
      throw ContractError("data must be sorted ascending (order statistics)");
    }
  }
}

SystemValue system_from_weights(std::span<const double> data, std::span<const double> weights,
                                const TnParams& theta, double width_cap) {
  const std::size_t n = data.size();
  if (n < 2) throw DomainError("estimating system needs at least 2 observations");
  if (weights.size() != n) throw ContractError("one weight per observation required");
  require_sorted(data);
  const kernels::ResidualSums r =
      kernels::residual_sums(data, weights, theta.mu(), theta.sigma());
  const BoundEstimates b =
      umvu_bounds(theta.mu(), theta.sigma(), data.front(), data.back(), n, width_cap);
  const double nn = static_cast<double>(n);
  return {r.r / nn, r.rw / nn, b.tau_l - theta.tau_l(), b.tau_u - theta.tau_u()};
}

SystemValue complete_system(std::span<const double> data, const LatentCounts& counts,
                            const TnParams& theta, double width_cap) {
  if (data.size() < 2) throw DomainError("estimating system needs at least 2 observations");
  require_sorted(data);
  const std::vector<double> w = xi_weights(data.size(), counts);
  return system_from_weights(data, w, theta, width_cap);
}

SystemValue observed_system(std::span<const double> data, const TnParams& theta,
                            double width_cap) {
  if (data.empty()) throw DomainError("estimating system needs at least 2 observations");
  return complete_system(data, latent_expectations(theta, data.size()), theta, width_cap);
}

}  // namespace tnes
