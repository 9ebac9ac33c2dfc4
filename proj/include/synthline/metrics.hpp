#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "synthline/dataset.hpp"
#include "synthline/task.hpp"

namespace synthline {

struct ConfusionMatrix {
  std::vector<std::string> label_space;
  std::vector<std::vector<std::size_t>> counts;  // counts[gold][pred]

  std::size_t total() const;
};

// counts[i][j] = pairs with gold class i predicted as class j. Errors:
// LengthMismatch, LabelOutOfSpace, EmptyInput.
ConfusionMatrix confusion_matrix(std::span<const std::string> gold,
                                 std::span<const std::string> pred,
                                 const std::vector<std::string>& space);

struct PerClassScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Per-class precision/recall/F1 with the zero-denominator convention
// (score 0 when a denominator is 0).
std::vector<PerClassScore> per_class_scores(const ConfusionMatrix& cm);

// Unweighted mean of per-class F1 over the full declared label space, so
// classes the predictor never emits still count.
double macro_f1(const ConfusionMatrix& cm);

// Longest common subsequence length (dynamic programming, symmetric).
std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// Sequence-level Rouge-L with balanced F (beta = 1). Tokenization is
// lowercase word runs (split on non-alphanumeric), matching word_tokens.
RougeScore rouge_l(std::string_view candidate, std::string_view reference);

struct MetricReport {
  std::string metric;
  double value = 0.0;
  std::size_t n = 0;
  std::vector<std::pair<std::string, PerClassScore>> per_class;  // classification
  std::vector<std::pair<std::string, RougeScore>> per_pair;      // generation, by record id

  // Floats rendered with 6 decimal places.
  std::string to_json() const;
};

// Scores predictions (record id -> predicted label / candidate text) against
// the gold dataset. Errors: MissingPrediction, ExtraPrediction, EmptyDataset.
MetricReport evaluate(const TaskSpec& spec,
                      const std::map<std::string, std::string>& predictions,
                      const Dataset& gold);

// "0.822222"-style fixed 6-decimal rendering shared by the report writers.
std::string format_fixed6(double value);

}  // namespace synthline
