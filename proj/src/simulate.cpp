#include "tnes/simulate.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <tuple>

#include "parallel.hpp"
#include "tnes/errors.hpp"
#include "tnes/rng.hpp"

namespace tnes {

void StudyPlan::validate() const {
  if (cases.empty()) throw DomainError("study plan has no cases");
  for (const StudyCase& c : cases) {
    if (!(c.tau_l0 < c.tau_u0)) throw DomainError("study case needs tau_l0 < tau_u0");
  }
  if (n_grid.empty()) throw DomainError("study plan has an empty n grid");
  for (std::size_t n : n_grid) {
    if (n < 3) throw DomainError("n grid entries must be at least 3");
  }
  if (reps_per_cell == 0) throw DomainError("reps per cell must be positive");
}

std::vector<StudyCase> default_cases() {
  return {{1, -3.0, -1.0}, {2, -2.0, 1.0}, {3, -2.0, 2.0},
          {4, -1.0, 1.0},  {5, -1.0, 2.0}, {6, 1.0, 3.0}};
}

std::vector<std::size_t> log_spaced_grid(std::size_t lo, std::size_t hi, std::size_t count) {
  if (lo == 0 || hi < lo || count == 0) throw DomainError("log_spaced_grid: bad range");
  std::vector<std::size_t> out;
  const double a = std::log10(static_cast<double>(lo));
  const double b = std::log10(static_cast<double>(hi));
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    const auto v = static_cast<std::size_t>(std::llround(std::pow(10.0, a + t * (b - a))));
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

std::uint64_t replicate_seed(std::uint64_t base_seed, int case_id, std::size_t n, std::size_t rep) {
  return derive_seed({base_seed, static_cast<std::uint64_t>(case_id), n, rep});
}

SimRecord run_replicate(const StudyCase& c, std::size_t n, std::size_t rep, std::uint64_t base_seed,
                        InitMode init, const EsConfig& config) {
  SimRecord r;
  r.case_id = c.id;
  r.n = n;
  r.rep = rep;
  r.seed = replicate_seed(base_seed, c.id, n, rep);
  const TnParams truth(0.0, 1.0, c.tau_l0, c.tau_u0);
  try {
    const std::vector<double> x = sample(truth, n, r.seed);
    const EsResult fitted =
        fit(x, init == InitMode::kTruth ? std::optional<TnParams>(truth) : std::nullopt, config);
    r.theta_hat = fitted.theta_hat;
    r.residual_norm = fitted.residual_norm;
    r.status = std::string(status_name(fitted.status));
  } catch (const std::exception&) {
    r.theta_hat.reset();
    r.residual_norm = std::nan("");
    r.status = "Failed";
  }
  return r;
}

namespace {

struct Cell {
  const StudyCase* c;
  std::size_t n;
  std::size_t rep;
};

std::vector<Cell> enumerate(const StudyPlan& plan) {
  std::vector<Cell> cells;
  cells.reserve(plan.cases.size() * plan.n_grid.size() * plan.reps_per_cell);
  for (const StudyCase& c : plan.cases) {
    for (std::size_t n : plan.n_grid) {
      for (std::size_t rep = 0; rep < plan.reps_per_cell; ++rep) cells.push_back({&c, n, rep});
    }
  }
  return cells;
}

double z_stat(const SimRecord& r, const TnParams& truth, double tau0, double tau_hat) {
  return static_cast<double>(r.n) * density(truth, tau0) * (tau_hat - tau0);
}

}  // namespace

void run_consistency_study(const StudyPlan& plan, const EsConfig& config, unsigned threads,
                           const std::function<void(const SimRecord&)>& sink) {
  plan.validate();
  config.validate();
  const std::vector<Cell> cells = enumerate(plan);
  detail::ordered_parallel<SimRecord>(
      cells.size(), threads,
      [&](std::size_t i) {
        return run_replicate(*cells[i].c, cells[i].n, cells[i].rep, plan.base_seed,
                             plan.init_mode, config);
      },
      [&](SimRecord&& r) { sink(r); });
}

std::vector<SimRecord> run_consistency_study(const StudyPlan& plan, const EsConfig& config,
                                             unsigned threads) {
  std::vector<SimRecord> out;
  run_consistency_study(plan, config, threads, [&](const SimRecord& r) { out.push_back(r); });
  return out;
}

void run_bound_dist_study(const StudyPlan& plan, const EsConfig& config, unsigned threads,
                          const std::function<void(const BoundRecord&)>& sink) {
  plan.validate();
  config.validate();
  const std::vector<Cell> cells = enumerate(plan);
  detail::ordered_parallel<BoundRecord>(
      cells.size(), threads,
      [&](std::size_t i) {
        const Cell& cell = cells[i];
        BoundRecord b{run_replicate(*cell.c, cell.n, cell.rep, plan.base_seed, plan.init_mode,
                                    config),
                      std::nan(""), std::nan("")};
        if (b.record.theta_hat) {
          const TnParams truth(0.0, 1.0, cell.c->tau_l0, cell.c->tau_u0);
          b.z_l = z_stat(b.record, truth, cell.c->tau_l0, b.record.theta_hat->tau_l());
          b.z_u = z_stat(b.record, truth, cell.c->tau_u0, b.record.theta_hat->tau_u());
        }
        return b;
      },
      [&](BoundRecord&& r) { sink(r); });
}

std::vector<BoundRecord> run_bound_dist_study(const StudyPlan& plan, const EsConfig& config,
                                              unsigned threads) {
  std::vector<BoundRecord> out;
  run_bound_dist_study(plan, config, threads, [&](const BoundRecord& r) { out.push_back(r); });
  return out;
}

double empirical_quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw DomainError("empirical_quantile: empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("empirical_quantile: p outside [0, 1]");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

std::size_t count_outliers(const std::vector<double>& sorted) {
  if (sorted.empty()) return 0;
  const double q1 = empirical_quantile(sorted, 0.25);
  const double q3 = empirical_quantile(sorted, 0.75);
  const double fence = 1.5 * (q3 - q1);
  return static_cast<std::size_t>(std::count_if(sorted.begin(), sorted.end(), [&](double v) {
    return v < q1 - fence || v > q3 + fence;
  }));
}

std::vector<QuantileRow> summarize_quantiles(const std::vector<SimRecord>& records,
                                             const std::vector<Probability>& probs) {
  if (records.empty()) throw DomainError("summarize_quantiles: no records");
  static const char* const kNames[4] = {"mu", "sigma", "tau_l", "tau_u"};
  std::map<std::pair<int, std::size_t>, std::array<std::vector<double>, 4>> groups;
  for (const SimRecord& r : records) {
    auto& g = groups[{r.case_id, r.n}];
    if (!r.theta_hat) continue;
    g[0].push_back(r.theta_hat->mu());
    g[1].push_back(r.theta_hat->sigma());
    g[2].push_back(r.theta_hat->tau_l());
    g[3].push_back(r.theta_hat->tau_u());
  }
  std::vector<QuantileRow> rows;
  for (auto& [key, cols] : groups) {
    for (int k = 0; k < 4; ++k) {
      std::vector<double>& v = cols[k];
      if (v.empty()) continue;
      std::sort(v.begin(), v.end());
      QuantileRow row{key.first, key.second, kNames[k], v.size(), {}, count_outliers(v)};
      for (const Probability& p : probs) row.quantiles.push_back(empirical_quantile(v, p));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_sim_header(std::ostream& os, bool with_z) {
  os << "case,n,rep,seed,mu_hat,sigma_hat,tau_l_hat,tau_u_hat,residual_norm,status";
  if (with_z) os << ",z_l,z_u";
  os << '\n';
}

namespace {

void write_sim_fields(std::ostream& os, const SimRecord& r) {
  const double nan = std::nan("");
  const TnParams* t = r.theta_hat ? &*r.theta_hat : nullptr;
  os << r.case_id << ',' << r.n << ',' << r.rep << ',' << r.seed << ','
     << format_double(t ? t->mu() : nan) << ',' << format_double(t ? t->sigma() : nan) << ','
     << format_double(t ? t->tau_l() : nan) << ',' << format_double(t ? t->tau_u() : nan) << ','
     << format_double(r.residual_norm) << ',' << r.status;
}

}  // namespace

void write_sim_row(std::ostream& os, const SimRecord& r) {
  write_sim_fields(os, r);
  os << '\n';
}

void write_bound_row(std::ostream& os, const BoundRecord& r) {
  write_sim_fields(os, r.record);
  os << ',' << format_double(r.z_l) << ',' << format_double(r.z_u) << '\n';
}

void write_quantile_csv(std::ostream& os, const std::vector<QuantileRow>& rows,
                        const std::vector<Probability>& probs) {
  os << "# empirical quantiles, type 7 (linear interpolation of order statistics)\n";
  os << "case,n,parameter,count";
  for (const Probability& p : probs) os << ",q" << format_double(p);
  os << ",outliers\n";
  for (const QuantileRow& r : rows) {
    os << r.case_id << ',' << r.n << ',' << r.parameter << ',' << r.count;
    for (double q : r.quantiles) os << ',' << format_double(q);
    os << ',' << r.outliers << '\n';
  }
}

}  // namespace tnes
