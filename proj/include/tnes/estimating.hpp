#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tnes/truncnorm.hpp"

namespace tnes {

// Expected numbers of parent draws below tau_l and above tau_u. Real valued.
class LatentCounts {
 public:
  LatentCounts(double n_l, double n_u);
  double n_l() const noexcept { return n_l_; }
  double n_u() const noexcept { return n_u_; }

 private:
  double n_l_, n_u_;
};

// Components of an estimating system, in the order (mu, sigma, tau_l, tau_u).
struct SystemValue {
  double eq_mu = 0.0;
  double eq_sigma = 0.0;
  double eq_tau_l = 0.0;
  double eq_tau_u = 0.0;

  double norm() const;
};

struct BoundEstimates {
  double tau_l;
  double tau_u;
};

inline constexpr double kDefaultWidthCap = 10.0;

// Latent counts are capped here; beyond it the weights no longer change.
inline constexpr double kMaxLatentCount = 1e15;

// Phi^{-1} of the median of Beta(n_l + k, n_u + n + 1 - k).
double xi_weight(std::size_t n, const LatentCounts& counts, std::size_t k);

// All n weights (k = 1..n) in one batch.
std::vector<double> xi_weights(std::size_t n, const LatentCounts& counts);

// n Phi(l*) / D and n (1 - Phi(u*)) / D.
LatentCounts latent_expectations(const TnParams& theta, std::size_t n);

// Unbiased bound estimates given (mu, sigma) and the sample extremes. Each
// correction term is capped at width_cap * sigma.
BoundEstimates umvu_bounds(double mu, double sigma, double x_min, double x_max, std::size_t n,
                           double width_cap = kDefaultWidthCap);

// Complete-data system for sorted data and given counts.
SystemValue complete_system(std::span<const double> data, const LatentCounts& counts,
                            const TnParams& theta, double width_cap = kDefaultWidthCap);

// Same system with precomputed weights (weights[i] belongs to data[i]).
SystemValue system_from_weights(std::span<const double> data, std::span<const double> weights,
                                const TnParams& theta, double width_cap = kDefaultWidthCap);

// complete_system with the counts replaced by latent_expectations(theta, n).
SystemValue observed_system(std::span<const double> data, const TnParams& theta,
                            double width_cap = kDefaultWidthCap);

// Throws ContractError unless data is nondecreasing and finite.
void require_sorted(std::span<const double> data);

}  // namespace tnes
