#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tnes/estimating.hpp"
#include "tnes/truncnorm.hpp"

namespace tnes {

struct Interval {
  double lo;
  double hi;
};

struct EsConfig {
  double tol_rel_loglik = 1e-6;
  int max_iters = 500;
  Interval mu_box{-10.0, 10.0};
  Interval sigma_box{1e-3, 10.0};
  double width_cap_multiplier = kDefaultWidthCap;
  bool keep_trace = false;

  // Throws DomainError on an empty box or nonpositive tolerance.
  void validate() const;
};

enum class EsStatus { kConverged, kMaxIters, kAtBoundary };

std::string_view status_name(EsStatus s);

struct EsTraceEntry {
  int iteration;
  TnParams theta;
  LogLikelihood loglik;
};

struct EsResult {
  TnParams theta_hat;
  double residual_norm;
  int iterations;
  // kAtBoundary whenever a box is active at the final iterate, whether or not
  // the likelihood criterion was met; `converged` records the latter.
  EsStatus status;
  bool converged;
  bool at_boundary;
  std::vector<EsTraceEntry> trace;
};

LatentCounts e_step(const TnParams& theta, std::size_t n);

// OLS of the order statistics on the weights (intercept mu, slope sigma),
// projected onto the boxes, then the unbiased bound estimates.
TnParams s_step(std::span<const double> data, const LatentCounts& counts, const EsConfig& config);

// ES iteration from init (default: mean, sd, min, max). Data need not be sorted.
EsResult fit(std::span<const double> data, std::optional<TnParams> init = std::nullopt,
             const EsConfig& config = {});

}  // namespace tnes
