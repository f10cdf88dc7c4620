#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tnes/probability.hpp"
#include "tnes/solver.hpp"
#include "tnes/truncnorm.hpp"

namespace tnes {

struct StudyCase {
  int id;
  double tau_l0;
  double tau_u0;
};

enum class InitMode { kSampleStats, kTruth };

struct StudyPlan {
  std::vector<StudyCase> cases;
  std::vector<std::size_t> n_grid;
  std::size_t reps_per_cell = 100;
  std::uint64_t base_seed = 20240601;
  InitMode init_mode = InitMode::kSampleStats;

  void validate() const;
};

// Six (tau_l0, tau_u0) pairs with mu0 = 0, sigma0 = 1, ids 1..6.
std::vector<StudyCase> default_cases();

// `count` integers evenly spaced in log10 between lo and hi (rounded,
// duplicates removed).
std::vector<std::size_t> log_spaced_grid(std::size_t lo, std::size_t hi, std::size_t count);

struct SimRecord {
  int case_id = 0;
  std::size_t n = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  std::optional<TnParams> theta_hat;  // empty when the fit threw
  double residual_norm = 0.0;
  std::string status;  // EsStatus name, or "Failed"
};

struct BoundRecord {
  SimRecord record;
  double z_l;  // n f(tau_l0) (tau_l_hat - tau_l0)
  double z_u;  // n f(tau_u0) (tau_u_hat - tau_u0)
};

std::uint64_t replicate_seed(std::uint64_t base_seed, int case_id, std::size_t n, std::size_t rep);

// One replicate: sample from the case's truth with the derived seed and fit.
SimRecord run_replicate(const StudyCase& c, std::size_t n, std::size_t rep, std::uint64_t base_seed,
                        InitMode init, const EsConfig& config);

// Records are delivered in (case, n, rep) order whatever the thread count.
void run_consistency_study(const StudyPlan& plan, const EsConfig& config, unsigned threads,
                           const std::function<void(const SimRecord&)>& sink);
std::vector<SimRecord> run_consistency_study(const StudyPlan& plan, const EsConfig& config,
                                             unsigned threads = 1);

void run_bound_dist_study(const StudyPlan& plan, const EsConfig& config, unsigned threads,
                          const std::function<void(const BoundRecord&)>& sink);
std::vector<BoundRecord> run_bound_dist_study(const StudyPlan& plan, const EsConfig& config,
                                              unsigned threads = 1);

struct QuantileRow {
  int case_id;
  std::size_t n;
  std::string parameter;  // mu, sigma, tau_l or tau_u
  std::size_t count;
  std::vector<double> quantiles;  // one per requested probability
  std::size_t outliers;           // beyond 1.5 IQR from the quartiles
};

// Linear interpolation between order statistics (type 7). Sorted input.
double empirical_quantile(const std::vector<double>& sorted, double p);

std::size_t count_outliers(const std::vector<double>& sorted);

// Per (case, n, parameter) over the successful fits.
std::vector<QuantileRow> summarize_quantiles(const std::vector<SimRecord>& records,
                                             const std::vector<Probability>& probs);

// CSV with 17 significant digits.
std::string format_double(double v);
void write_sim_header(std::ostream& os, bool with_z);
void write_sim_row(std::ostream& os, const SimRecord& r);
void write_bound_row(std::ostream& os, const BoundRecord& r);
void write_quantile_csv(std::ostream& os, const std::vector<QuantileRow>& rows,
                        const std::vector<Probability>& probs);

}  // namespace tnes
