// tnes: command-line front end.
//
//   tnes sample      --theta mu,sigma,tau_l,tau_u --n N [--seed S]
//   tnes fit         --input FILE [--init stats|truth --theta ...] [--json FILE]
//   tnes simulate    [--cases 1,3] [--n 10,100] [--reps R] [--threads T]
//   tnes bound-dist  [--cases 4] [--n 30,50,100] [--reps R]
//   tnes asymptotics --theta mu,sigma,tau_l,tau_u [--format csv|json]
//   tnes classify    --input FILE --known a,b --holdout c [--splits K]
//
// Exit status: 0 success, 1 usage error, 2 data or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tnes/asymptotics.hpp"
#include "tnes/classify.hpp"
#include "tnes/csv.hpp"
#include "tnes/errors.hpp"
#include "tnes/kernels.hpp"
#include "tnes/simulate.hpp"
#include "tnes/solver.hpp"
#include "tnes/truncnorm.hpp"

namespace {

using namespace tnes;

constexpr std::uint64_t kDefaultSeed = 20240601;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& flag, const std::string& text) {
  std::vector<double> out;
  for (std::string_view f : split_fields(text)) {
    const std::optional<double> v = parse_double(f);
    if (!v) throw UsageError(flag + ": '" + std::string(f) + "' is not a number");
    out.push_back(*v);
  }
  return out;
}

double parse_real(const std::string& flag, const std::string& text) {
  const std::vector<double> v = parse_reals(flag, text);
  if (v.size() != 1) throw UsageError(flag + ": expected one number");
  return v.front();
}

std::vector<std::size_t> parse_sizes(const std::string& flag, const std::string& text) {
  std::vector<std::size_t> out;
  for (double v : parse_reals(flag, text)) {
    if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw UsageError(flag + ": expected positive integers");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<std::string> parse_names(const std::string& text) {
  std::vector<std::string> out;
  for (std::string_view f : split_fields(text)) {
    if (!f.empty()) out.emplace_back(f);
  }
  return out;
}

TnParams parse_theta(const std::string& text) {
  const std::vector<double> v = parse_reals("--theta", text);
  if (v.size() != 4) throw UsageError("--theta: expected mu,sigma,tau_l,tau_u");
  return TnParams(v[0], v[1], v[2], v[3]);
}

// stdout unless a path is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

// Options shared by every command that runs the solver.
struct SolverFlags {
  std::string tol = "1e-6";
  int max_iters = 500;
  std::string width_cap = "10";

  void attach(CLI::App* app) {
    app->add_option("--tol", tol, "Relative log-likelihood change that stops the iteration")
        ->capture_default_str();
    app->add_option("--max-iters", max_iters, "Iteration limit")->capture_default_str();
    app->add_option("--width-cap", width_cap,
                    "Cap on each bound correction, in multiples of sigma")
        ->capture_default_str();
  }

  EsConfig config() const {
    EsConfig c;
    c.tol_rel_loglik = parse_real("--tol", tol);
    c.max_iters = max_iters;
    c.width_cap_multiplier = parse_real("--width-cap", width_cap);
    try {
      c.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return c;
  }
};

InitMode parse_init(const std::string& s) {
  if (s == "stats") return InitMode::kSampleStats;
  if (s == "truth") return InitMode::kTruth;
  throw UsageError("--init: expected 'stats' or 'truth'");
}

std::vector<StudyCase> select_cases(const std::string& text) {
  const std::vector<StudyCase> all = default_cases();
  if (text.empty()) return all;
  std::vector<StudyCase> out;
  for (std::size_t id : parse_sizes("--cases", text)) {
    if (id < 1 || id > all.size()) throw UsageError("--cases: ids run from 1 to 6");
    out.push_back(all[id - 1]);
  }
  return out;
}

int cmd_sample(const std::string& theta, std::size_t n, std::uint64_t seed,
               const std::string& output) {
  const TnParams t = parse_theta(theta);
  const std::vector<double> x = sample(t, n, seed);
  Output out(output);
  std::ostream& os = out.stream();
  os << "value\n";
  for (double v : x) os << format_double(v) << '\n';
  return 0;
}

int cmd_fit(const std::string& input, const std::string& init, const std::string& theta,
            const SolverFlags& flags, bool trace, const std::string& json_path,
            const std::string& output) {
  std::optional<TnParams> start;
  if (parse_init(init) == InitMode::kTruth) {
    if (theta.empty()) throw UsageError("--init truth needs --theta");
    start = parse_theta(theta);
  }
  EsConfig cfg = flags.config();
  cfg.keep_trace = trace;
  std::ifstream in = open_input(input);
  const std::vector<double> x = read_value_column(in);
  const EsResult r = fit(x, start, cfg);

  Output out(output);
  std::ostream& os = out.stream();
  os << "n=" << x.size() << '\n'
     << "mu_hat=" << format_double(r.theta_hat.mu()) << '\n'
     << "sigma_hat=" << format_double(r.theta_hat.sigma()) << '\n'
     << "tau_l_hat=" << format_double(r.theta_hat.tau_l()) << '\n'
     << "tau_u_hat=" << format_double(r.theta_hat.tau_u()) << '\n'
     << "residual_norm=" << format_double(r.residual_norm) << '\n'
     << "iterations=" << r.iterations << '\n'
     << "status=" << status_name(r.status) << '\n';
  if (trace) {
    for (const EsTraceEntry& e : r.trace) {
      os << "trace=" << e.iteration << ',' << format_double(e.theta.mu()) << ','
         << format_double(e.theta.sigma()) << ',' << format_double(e.theta.tau_l()) << ','
         << format_double(e.theta.tau_u()) << ','
         << (e.loglik.is_minus_infinity() ? std::string("-Inf")
                                          : format_double(e.loglik.value()))
         << '\n';
    }
  }

  if (!json_path.empty()) {
    nlohmann::json j;
    j["n"] = x.size();
    j["mu_hat"] = r.theta_hat.mu();
    j["sigma_hat"] = r.theta_hat.sigma();
    j["tau_l_hat"] = r.theta_hat.tau_l();
    j["tau_u_hat"] = r.theta_hat.tau_u();
    j["residual_norm"] = r.residual_norm;
    j["iterations"] = r.iterations;
    j["status"] = std::string(status_name(r.status));
    j["converged"] = r.converged;
    j["at_boundary"] = r.at_boundary;
    Output jo(json_path);
    jo.stream() << j.dump(2) << '\n';
  }
  return 0;
}

StudyPlan make_plan(const std::string& cases, const std::string& n_grid,
                    const std::vector<std::size_t>& default_grid, std::size_t reps,
                    std::uint64_t seed, const std::string& init) {
  StudyPlan plan;
  plan.cases = select_cases(cases);
  plan.n_grid = n_grid.empty() ? default_grid : parse_sizes("--n", n_grid);
  plan.reps_per_cell = reps;
  plan.base_seed = seed;
  plan.init_mode = parse_init(init);
  try {
    plan.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return plan;
}

int cmd_simulate(const StudyPlan& plan, const EsConfig& cfg, unsigned threads,
                 const std::string& output, const std::string& summary_path) {
  Output out(output);
  std::ostream& os = out.stream();
  write_sim_header(os, false);
  std::vector<SimRecord> kept;
  run_consistency_study(plan, cfg, threads, [&](const SimRecord& r) {
    write_sim_row(os, r);
    os.flush();
    if (!summary_path.empty()) kept.push_back(r);
  });
  if (!summary_path.empty()) {
    const std::vector<Probability> probs = {Probability(0.25), Probability(0.5),
                                            Probability(0.75)};
    Output so(summary_path);
    write_quantile_csv(so.stream(), summarize_quantiles(kept, probs), probs);
  }
  return 0;
}

int cmd_bound_dist(const StudyPlan& plan, const EsConfig& cfg, unsigned threads,
                   const std::string& output) {
  Output out(output);
  std::ostream& os = out.stream();
  write_sim_header(os, true);
  run_bound_dist_study(plan, cfg, threads, [&](const BoundRecord& r) {
    write_bound_row(os, r);
    os.flush();
  });
  return 0;
}

void put_matrix(nlohmann::json& j, const std::string& name, const Matrix2& m) {
  j[name] = {{m.a11, m.a12}, {m.a21, m.a22}};
}

int cmd_asymptotics(const std::string& theta, const std::string& format,
                    const std::string& output) {
  const TnParams t = parse_theta(theta);
  const LimitCov lc = musigma_limit_cov(t);
  const Matrix4 jac = jacobian(t);
  Output out(output);
  std::ostream& os = out.stream();
  if (format == "json") {
    nlohmann::json j;
    j["theta0"] = {t.mu(), t.sigma(), t.tau_l(), t.tau_u()};
    put_matrix(j, "sigma", lc.sigma_mat);
    put_matrix(j, "gamma", lc.gamma_mat);
    put_matrix(j, "musigma_cov", lc.musigma_cov);
    j["jacobian"] = jac;
    j["jacobian_det"] = det(jac);
    os << j.dump(2) << '\n';
    return 0;
  }
  if (format != "csv") throw UsageError("--format: expected 'csv' or 'json'");
  os << "matrix,row,col,value\n";
  auto put2 = [&](const char* name, const Matrix2& m) {
    const double v[2][2] = {{m.a11, m.a12}, {m.a21, m.a22}};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        os << name << ',' << r + 1 << ',' << c + 1 << ',' << format_double(v[r][c]) << '\n';
      }
    }
  };
  put2("sigma", lc.sigma_mat);
  put2("gamma", lc.gamma_mat);
  put2("musigma_cov", lc.musigma_cov);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      os << "jacobian," << r + 1 << ',' << c + 1 << ',' << format_double(jac[r][c]) << '\n';
    }
  }
  return 0;
}

int cmd_classify(const std::string& input, const std::string& known, const std::string& holdout,
                 SplitStudyOptions opts, const std::string& cutoff, const std::string& odd,
                 const std::string& output) {
  opts.qda_cutoff = parse_real("--cutoff", cutoff);
  if (!(opts.qda_cutoff > 0.0 && opts.qda_cutoff < 1.0)) {
    throw UsageError("--cutoff: must lie in (0, 1)");
  }
  if (odd == "floor") {
    opts.odd_split = OddSplit::kFloorToTrain;
  } else if (odd == "ceil") {
    opts.odd_split = OddSplit::kCeilToTrain;
  } else {
    throw UsageError("--odd-split: expected 'floor' or 'ceil'");
  }
  if (opts.n_splits == 0) throw UsageError("--splits: must be positive");
  std::ifstream in = open_input(input);
  const std::vector<LabeledValue> data = read_labeled_csv(in);
  const SplitStudyResult res =
      run_split_study(data, parse_names(known), parse_names(holdout), opts);
  Output out(output);
  write_confusion_csv(out.stream(), res);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Truncated normal estimation: sampling, ES fitting, simulation studies, "
               "asymptotic covariances and truncated-normal discriminant analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tnes 1.0.0");

  std::string output;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string isa;
  app.add_option("--isa", isa, "Force the kernel variant: scalar or avx2");

  // sample
  CLI::App* sample_cmd = app.add_subcommand("sample", "Draw a sorted sample");
  std::string s_theta;
  std::size_t s_n = 0;
  sample_cmd->add_option("--theta", s_theta, "mu,sigma,tau_l,tau_u")->required();
  sample_cmd->add_option("--n", s_n, "Sample size")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  sample_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  // fit
  CLI::App* fit_cmd = app.add_subcommand("fit", "Fit all four parameters to a sample");
  std::string f_input, f_init = "stats", f_theta, f_json;
  bool f_trace = false;
  SolverFlags f_flags;
  fit_cmd->add_option("-i,--input", f_input, "CSV with the observations in the first column")
      ->required();
  fit_cmd->add_option("--init", f_init, "Starting point: stats (mean, sd, min, max) or truth")
      ->capture_default_str();
  fit_cmd->add_option("--theta", f_theta, "mu,sigma,tau_l,tau_u used by --init truth");
  fit_cmd->add_option("--json", f_json, "Also write the result as JSON to this file");
  fit_cmd->add_flag("--trace", f_trace, "Print every iterate");
  fit_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  f_flags.attach(fit_cmd);

  // simulate / bound-dist
  std::string m_cases, m_n, m_init = "stats", m_summary;
  std::size_t m_reps = 0;
  SolverFlags m_flags;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Consistency study over the six cases");
  CLI::App* bd_cmd =
      app.add_subcommand("bound-dist", "Replications for the bound limiting distributions");
  for (CLI::App* c : {sim_cmd, bd_cmd}) {
    c->add_option("--cases", m_cases, "Case ids 1-6, comma separated (default all)");
    c->add_option("--n", m_n, "Sample sizes, comma separated");
    c->add_option("--reps", m_reps, "Replicates per (case, n)");
    c->add_option("--seed", seed, "Base seed")->capture_default_str();
    c->add_option("--threads", threads, "Worker threads")->capture_default_str();
    c->add_option("--init", m_init, "stats or truth")->capture_default_str();
    c->add_option("-o,--output", output, "Output CSV (default stdout)");
    m_flags.attach(c);
  }
  sim_cmd->add_option("--summary", m_summary, "Write per-cell quartiles to this CSV");

  // asymptotics
  CLI::App* asy_cmd =
      app.add_subcommand("asymptotics", "Sigma, Gamma, Gamma Sigma Gamma^T and the Jacobian");
  std::string a_theta, a_format = "csv";
  asy_cmd->add_option("--theta", a_theta, "mu,sigma,tau_l,tau_u")->required();
  asy_cmd->add_option("--format", a_format, "csv or json")->capture_default_str();
  asy_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  // classify
  CLI::App* cls_cmd =
      app.add_subcommand("classify", "Repeated train/test splits, TQDA versus QDA");
  std::string c_input, c_known, c_holdout, c_cutoff = "0.05", c_odd = "floor";
  SplitStudyOptions c_opts;
  SolverFlags c_flags;
  cls_cmd->add_option("-i,--input", c_input, "CSV with header label,value")->required();
  cls_cmd->add_option("--known", c_known, "Known class labels, comma separated")->required();
  cls_cmd->add_option("--holdout", c_holdout, "Labels that only appear in test sets");
  cls_cmd->add_option("--splits", c_opts.n_splits, "Number of random splits")
      ->capture_default_str();
  cls_cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
  cls_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
  cls_cmd->add_option("--cutoff", c_cutoff, "QDA atypicality cutoff")->capture_default_str();
  cls_cmd->add_option("--odd-split", c_odd, "Odd class sizes: floor or ceil goes to training")
      ->capture_default_str();
  cls_cmd->add_option("-o,--output", output, "Output CSV (default stdout)");
  c_flags.attach(cls_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (!isa.empty()) {
    if (isa == "scalar") {
      kernels::set_isa_override(kernels::Isa::kScalar);
    } else if (isa == "avx2" && kernels::isa_supported(kernels::Isa::kAvx2)) {
      kernels::set_isa_override(kernels::Isa::kAvx2);
    } else {
      throw UsageError("--isa: '" + isa + "' is not available");
    }
  }

  if (sample_cmd->parsed()) return cmd_sample(s_theta, s_n, seed, output);
  if (fit_cmd->parsed()) {
    return cmd_fit(f_input, f_init, f_theta, f_flags, f_trace, f_json, output);
  }
  if (sim_cmd->parsed()) {
    const StudyPlan plan = make_plan(m_cases, m_n, log_spaced_grid(10, 1000, 8),
                                     m_reps ? m_reps : 100, seed, m_init);
    return cmd_simulate(plan, m_flags.config(), threads, output, m_summary);
  }
  if (bd_cmd->parsed()) {
    const StudyPlan plan =
        make_plan(m_cases, m_n, {30, 50, 100}, m_reps ? m_reps : 2000, seed, m_init);
    return cmd_bound_dist(plan, m_flags.config(), threads, output);
  }
  if (asy_cmd->parsed()) return cmd_asymptotics(a_theta, a_format, output);
  if (cls_cmd->parsed()) {
    c_opts.seed = seed;
    c_opts.threads = threads;
    c_opts.es_config = c_flags.config();
    return cmd_classify(c_input, c_known, c_holdout, c_opts, c_cutoff, c_odd, output);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
