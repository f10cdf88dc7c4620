#include "tnes/classify.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "parallel.hpp"
#include "tnes/csv.hpp"
#include "tnes/errors.hpp"
#include "tnes/rng.hpp"
#include "tnes/simulate.hpp"
#include "tnes/specfns.hpp"

namespace tnes {

namespace {

std::map<std::string, std::vector<double>> group(const std::vector<LabeledValue>& data) {
  std::map<std::string, std::vector<double>> g;
  for (const LabeledValue& lv : data) g[lv.label].push_back(lv.value);
  return g;
}

std::size_t index_of(const std::vector<std::string>& v, const std::string& s) {
  const auto it = std::find(v.begin(), v.end(), s);
  if (it == v.end()) throw DomainError("unknown label '" + s + "'");
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

TqdaModel fit_tqda(const std::vector<LabeledValue>& train, const EsConfig& config) {
  if (train.empty()) throw DomainError("fit_tqda: no training data");
  TqdaModel m;
  const double total = static_cast<double>(train.size());
  for (const auto& [label, values] : group(train)) {
    if (values.size() < 3) {
      throw DomainError("fit_tqda: class '" + label + "' has fewer than 3 observations");
    }
    m.labels.push_back(label);
    m.params.push_back(fit(values, std::nullopt, config).theta_hat);
    m.priors.push_back(static_cast<double>(values.size()) / total);
  }
  return m;
}

Prediction predict_tqda(const TqdaModel& model, double x) {
  Prediction best;
  double best_score = 0.0;
  for (std::size_t i = 0; i < model.labels.size(); ++i) {
    const double ld = log_density(model.params[i], x);
    if (std::isinf(ld)) continue;
    const double score = std::log(model.priors[i]) + ld;
    if (!best || score > best_score) {
      best = i;
      best_score = score;
    }
  }
  return best;
}

QdaModel fit_qda_atypicality(const std::vector<LabeledValue>& train) {
  if (train.empty()) throw DomainError("fit_qda_atypicality: no training data");
  QdaModel m;
  const double total = static_cast<double>(train.size());
  for (const auto& [label, values] : group(train)) {
    if (values.size() < 2) {
      throw DomainError("fit_qda_atypicality: class '" + label + "' has fewer than 2 observations");
    }
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    if (!(sd > 0.0)) throw DegenerateSampleError("class '" + label + "' has zero spread");
    m.labels.push_back(label);
    m.means.push_back(mean);
    m.sds.push_back(sd);
    m.priors.push_back(n / total);
  }
  return m;
}

Prediction predict_qda(const QdaModel& model, double x, double cutoff) {
  if (!(cutoff > 0.0 && cutoff < 1.0)) throw DomainError("predict_qda: cutoff must be in (0, 1)");
  double max_typ = 0.0;
  Prediction best;
  double best_score = 0.0;
  for (std::size_t i = 0; i < model.labels.size(); ++i) {
    const double z = (x - model.means[i]) / model.sds[i];
    max_typ = std::max(max_typ, 2.0 * std_normal_sf(std::fabs(z)));
    const double score = std::log(model.priors[i]) - 0.5 * z * z - std::log(model.sds[i]);
    if (!best || score > best_score) {
      best = i;
      best_score = score;
    }
  }
  if (max_typ < cutoff) return std::nullopt;
  return best;
}

double ConfusionSummary::cell_mean(const std::string& truth, const std::string& predicted) const {
  return mean[index_of(true_labels, truth)][index_of(predicted_labels, predicted)];
}

double ConfusionSummary::cell_sd(const std::string& truth, const std::string& predicted) const {
  return sd[index_of(true_labels, truth)][index_of(predicted_labels, predicted)];
}

namespace {

using Counts = std::vector<std::vector<double>>;

struct SplitCounts {
  Counts tqda;
  Counts qda;
};

struct Accumulator {
  Counts sum;
  Counts sumsq;
  explicit Accumulator(std::size_t rows, std::size_t cols)
      : sum(rows, std::vector<double>(cols, 0.0)), sumsq(rows, std::vector<double>(cols, 0.0)) {}
  void add(const Counts& c) {
    for (std::size_t r = 0; r < c.size(); ++r) {
      for (std::size_t k = 0; k < c[r].size(); ++k) {
        sum[r][k] += c[r][k];
        sumsq[r][k] += c[r][k] * c[r][k];
      }
    }
  }
  void finish(ConfusionSummary& out, std::size_t splits) const {
    const double s = static_cast<double>(splits);
    out.mean = sum;
    out.sd = sum;
    for (std::size_t r = 0; r < sum.size(); ++r) {
      for (std::size_t k = 0; k < sum[r].size(); ++k) {
        const double m = sum[r][k] / s;
        out.mean[r][k] = m;
        double var = splits > 1 ? (sumsq[r][k] - s * m * m) / (s - 1.0) : 0.0;
        out.sd[r][k] = std::sqrt(std::max(var, 0.0));
      }
    }
  }
};

// Fisher-Yates with a rejection-sampled index, so the permutation does not
// depend on the standard library's distribution implementations.
void shuffle(std::vector<double>& v, Engine& eng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(eng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

SplitStudyResult run_split_study(const std::vector<LabeledValue>& data,
                                 const std::vector<std::string>& known_labels,
                                 const std::vector<std::string>& holdout_labels,
                                 const SplitStudyOptions& options) {
  if (options.n_splits == 0) throw DomainError("run_split_study: need at least one split");
  const auto groups = group(data);
  std::set<std::string> known(known_labels.begin(), known_labels.end());
  std::set<std::string> holdout(holdout_labels.begin(), holdout_labels.end());
  if (known.empty()) throw DomainError("run_split_study: no known classes");
  for (const std::string& h : holdout) {
    if (known.count(h)) throw DomainError("label '" + h + "' is both known and held out");
  }
  for (const std::string& k : known) {
    const auto it = groups.find(k);
    if (it == groups.end()) throw DomainError("known class '" + k + "' has no observations");
    if (it->second.size() < 6) {
      throw DomainError("known class '" + k + "' needs at least 6 observations");
    }
  }
  for (const std::string& h : holdout) {
    if (!groups.count(h)) throw DomainError("holdout class '" + h + "' has no observations");
  }

  ConfusionSummary shape;
  shape.true_labels.assign(known.begin(), known.end());
  shape.true_labels.insert(shape.true_labels.end(), holdout.begin(), holdout.end());
  shape.predicted_labels.assign(known.begin(), known.end());
  shape.predicted_labels.push_back(kNoClass);
  const std::size_t rows = shape.true_labels.size();
  const std::size_t cols = shape.predicted_labels.size();
  const std::size_t none_col = cols - 1;

  auto one_split = [&](std::size_t s) {
    Engine eng(derive_seed({options.seed, s}));
    std::vector<LabeledValue> train;
    std::vector<LabeledValue> test;
    for (const std::string& k : known) {
      std::vector<double> v = groups.at(k);
      shuffle(v, eng);
      const std::size_t half = options.odd_split == OddSplit::kFloorToTrain
                                   ? v.size() / 2
                                   : (v.size() + 1) / 2;
      for (std::size_t i = 0; i < v.size(); ++i) {
        (i < half ? train : test).push_back({k, v[i]});
      }
    }
    for (const std::string& h : holdout) {
      for (double x : groups.at(h)) test.push_back({h, x});
    }
    const TqdaModel tm = fit_tqda(train, options.es_config);
    const QdaModel qm = fit_qda_atypicality(train);
    SplitCounts c{Counts(rows, std::vector<double>(cols, 0.0)),
                  Counts(rows, std::vector<double>(cols, 0.0))};
    for (const LabeledValue& t : test) {
      const std::size_t r = index_of(shape.true_labels, t.label);
      const Prediction pt = predict_tqda(tm, t.value);
      const Prediction pq = predict_qda(qm, t.value, options.qda_cutoff);
      // Model labels and the known columns share the same sorted order.
      c.tqda[r][pt ? *pt : none_col] += 1.0;
      c.qda[r][pq ? *pq : none_col] += 1.0;
    }
    return c;
  };

  Accumulator acc_t(rows, cols);
  Accumulator acc_q(rows, cols);
  detail::ordered_parallel<SplitCounts>(options.n_splits, options.threads, one_split,
                                        [&](SplitCounts&& c) {
                                          acc_t.add(c.tqda);
                                          acc_q.add(c.qda);
                                        });
  SplitStudyResult out{shape, shape};
  acc_t.finish(out.tqda, options.n_splits);
  acc_q.finish(out.qda, options.n_splits);
  return out;
}

std::vector<LabeledValue> read_labeled_csv(std::istream& is) {
  std::vector<LabeledValue> out;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::vector<std::string_view> f = split_fields(line);
    if (!header_seen) {
      header_seen = true;
      if (f.size() == 2 && f[0] == "label" && f[1] == "value") continue;
      throw DomainError("line " + std::to_string(lineno) + ": expected header 'label,value'");
    }
    if (f.size() != 2) {
      throw DomainError("line " + std::to_string(lineno) + ": expected 2 fields");
    }
    const std::optional<double> v = parse_double(f[1]);
    if (!v || !std::isfinite(*v)) {
      throw DomainError("line " + std::to_string(lineno) + ": value is not a finite number");
    }
    if (f[0].empty()) throw DomainError("line " + std::to_string(lineno) + ": empty label");
    out.push_back({std::string(f[0]), *v});
  }
  if (!header_seen) throw DomainError("line 1: empty input");
  return out;
}

void write_confusion_csv(std::ostream& os, const SplitStudyResult& result) {
  os << "method,true_label,predicted,mean,sd\n";
  auto emit = [&](const char* method, const ConfusionSummary& s) {
    for (std::size_t r = 0; r < s.true_labels.size(); ++r) {
      for (std::size_t c = 0; c < s.predicted_labels.size(); ++c) {
        os << method << ',' << s.true_labels[r] << ',' << s.predicted_labels[c] << ','
           << format_double(s.mean[r][c]) << ',' << format_double(s.sd[r][c]) << '\n';
      }
    }
  };
  emit("TQDA", result.tqda);
  emit("QDA", result.qda);
}

}  // namespace tnes
