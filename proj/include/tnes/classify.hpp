#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tnes/solver.hpp"
#include "tnes/truncnorm.hpp"

namespace tnes {

struct LabeledValue {
  std::string label;
  double value;
};

// Labels are kept in sorted order; ties in prediction go to the earlier label.
struct TqdaModel {
  std::vector<std::string> labels;
  std::vector<TnParams> params;
  std::vector<double> priors;
};

struct QdaModel {
  std::vector<std::string> labels;
  std::vector<double> means;
  std::vector<double> sds;
  std::vector<double> priors;
};

// Index into the model's labels, or empty for "no known class".
using Prediction = std::optional<std::size_t>;

TqdaModel fit_tqda(const std::vector<LabeledValue>& train, const EsConfig& config = {});
Prediction predict_tqda(const TqdaModel& model, double x);

QdaModel fit_qda_atypicality(const std::vector<LabeledValue>& train);

// Typicality of x under class c: 2 (1 - Phi(|x - mean_c| / sd_c)). No class
// when every typicality is strictly below the cutoff.
Prediction predict_qda(const QdaModel& model, double x, double cutoff = 0.05);

// Mean and standard deviation (n - 1 denominator) of each confusion cell
// across splits. Rows are true labels (known, then holdout); columns are the
// known labels followed by "NoClass".
struct ConfusionSummary {
  std::vector<std::string> true_labels;
  std::vector<std::string> predicted_labels;
  std::vector<std::vector<double>> mean;
  std::vector<std::vector<double>> sd;

  double cell_mean(const std::string& truth, const std::string& predicted) const;
  double cell_sd(const std::string& truth, const std::string& predicted) const;
};

inline constexpr const char* kNoClass = "NoClass";

enum class OddSplit { kFloorToTrain, kCeilToTrain };

struct SplitStudyOptions {
  std::size_t n_splits = 500;
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
  double qda_cutoff = 0.05;
  OddSplit odd_split = OddSplit::kFloorToTrain;
  EsConfig es_config{};
};

struct SplitStudyResult {
  ConfusionSummary tqda;
  ConfusionSummary qda;
};

// Each split puts half of every known class in training (shuffled with a
// per-split seed) and the rest, plus every holdout observation, in testing.
SplitStudyResult run_split_study(const std::vector<LabeledValue>& data,
                                 const std::vector<std::string>& known_labels,
                                 const std::vector<std::string>& holdout_labels,
                                 const SplitStudyOptions& options);

// Header `label,value`. Throws DomainError naming the line on malformed input.
std::vector<LabeledValue> read_labeled_csv(std::istream& is);

void write_confusion_csv(std::ostream& os, const SplitStudyResult& result);

}  // namespace tnes
