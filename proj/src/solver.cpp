#include "tnes/solver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tnes/errors.hpp"
#include "tnes/kernels.hpp"

namespace tnes {

void EsConfig::validate() const {
  if (!(tol_rel_loglik > 0.0)) throw DomainError("tolerance must be positive");
  if (max_iters < 1) throw DomainError("max_iters must be positive");
  if (!(mu_box.lo <= mu_box.hi)) throw DomainError("empty mu box");
  if (!(sigma_box.lo > 0.0 && sigma_box.lo <= sigma_box.hi)) {
    throw DomainError("sigma box must be a nonempty positive interval");
  }
  if (!(width_cap_multiplier > 0.0)) throw DomainError("width cap must be positive");
}

std::string_view status_name(EsStatus s) {
  switch (s) {
    case EsStatus::kConverged:
      return "Converged";
    case EsStatus::kMaxIters:
      return "MaxIters";
    case EsStatus::kAtBoundary:
      return "AtBoundary";
  }
  return "Unknown";
}

LatentCounts e_step(const TnParams& theta, std::size_t n) { return latent_expectations(theta, n); }

namespace {

TnParams s_step_sorted(std::span<const double> x, const LatentCounts& counts,
                       const EsConfig& config) {
  const std::size_t n = x.size();
  const std::vector<double> w = xi_weights(n, counts);
  const double nn = static_cast<double>(n);
  const double xbar = kernels::sum(x) / nn;
  const double wbar = kernels::sum(w) / nn;
  const kernels::CenteredSums cs = kernels::centered_sums(x, w, xbar, wbar);
  if (!(cs.sww > 0.0)) throw InvariantError("weights have zero variance");
  double sigma = cs.sxw / cs.sww;
  double mu = xbar - sigma * wbar;
  sigma = std::clamp(sigma, config.sigma_box.lo, config.sigma_box.hi);
  mu = std::clamp(mu, config.mu_box.lo, config.mu_box.hi);
  const BoundEstimates b =
      umvu_bounds(mu, sigma, x.front(), x.back(), n, config.width_cap_multiplier);
  return TnParams(mu, sigma, b.tau_l, b.tau_u);
}

bool on_boundary(const TnParams& t, const EsConfig& c) {
  return t.mu() <= c.mu_box.lo || t.mu() >= c.mu_box.hi || t.sigma() <= c.sigma_box.lo ||
         t.sigma() >= c.sigma_box.hi;
}

}  // namespace

TnParams s_step(std::span<const double> data, const LatentCounts& counts, const EsConfig& config) {
  config.validate();
  if (data.size() < 2) throw DomainError("s_step: need at least 2 observations");
  require_sorted(data);
  return s_step_sorted(data, counts, config);
}

EsResult fit(std::span<const double> data, std::optional<TnParams> init, const EsConfig& config) {
  config.validate();
  const std::size_t n = data.size();
  if (n < 3) throw DomainError("fit: need at least 3 observations");
  std::vector<double> x(data.begin(), data.end());
  for (double v : x) {
    if (!std::isfinite(v)) throw DomainError("fit: data must be finite");
  }
  std::sort(x.begin(), x.end());
  if (x.front() == x.back()) throw DegenerateSampleError("fit: all observations are identical");

  const double nn = static_cast<double>(n);
  if (!init) {
    const double mean = kernels::sum(x) / nn;
    const double sd = std::sqrt(kernels::sum_sq_standardized(x, mean, 1.0) / (nn - 1.0));
    init = TnParams(mean, sd, x.front(), x.back());
  }

  std::vector<EsTraceEntry> trace;
  TnParams theta = *init;
  LogLikelihood ll = log_likelihood(theta, x);
  int iter = 0;
  if (config.keep_trace) trace.push_back({iter, theta, ll});

  // The relative-change test is undefined at -inf; take one step first.
  if (ll.is_minus_infinity()) {
    theta = s_step_sorted(x, e_step(theta, n), config);
    ll = log_likelihood(theta, x);
    ++iter;
    if (config.keep_trace) trace.push_back({iter, theta, ll});
  }

  bool converged = false;
  while (iter < config.max_iters) {
    const TnParams next = s_step_sorted(x, e_step(theta, n), config);
    const LogLikelihood next_ll = log_likelihood(next, x);
    ++iter;
    if (config.keep_trace) trace.push_back({iter, next, next_ll});
    if (next_ll.is_minus_infinity()) throw InvariantError("iterate excludes observed data");
    const double prev = ll.value();
    const double rel = std::fabs(next_ll.value() - prev) / std::max(1.0, std::fabs(prev));
    theta = next;
    ll = next_ll;
    if (rel < config.tol_rel_loglik) {
      converged = true;
      break;
    }
  }

  const double residual = observed_system(x, theta, config.width_cap_multiplier).norm();
  const bool boundary = on_boundary(theta, config);
  EsStatus status = converged ? EsStatus::kConverged : EsStatus::kMaxIters;
  if (boundary) status = EsStatus::kAtBoundary;
  return {theta, residual, iter, status, converged, boundary, std::move(trace)};
}

}  // namespace tnes
