#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "synthline/backend.hpp"
#include "synthline/dataset.hpp"
#include "synthline/prompt.hpp"

namespace synthline {

// Hashed n-gram bag-of-words features for the reference classifier.
struct FeatureConfig {
  bool unigrams = true;
  bool bigrams = true;
  std::uint32_t hash_dim = 1u << 18;  // power of two, >= 2^10
  bool lowercase = true;
  bool l2_normalize = true;

  void validate() const;
};

// (feature index, value), sorted by index, unique.
using SparseVec = std::vector<std::pair<std::uint32_t, double>>;

// Tokens are maximal alphanumeric runs of the NFC-normalized (and, by
// default, lowercased) text; n-grams are hashed into hash_dim buckets with a
// fixed keyed hash. Empty text yields an empty vector.
SparseVec featurize(std::string_view text, const FeatureConfig& cfg);

struct TrainConfig {
  int epochs = 20;
  int batch_size = 32;
  double learning_rate = 0.1;  // with 1/sqrt(t) decay
  double l2_penalty = 1e-4;
  std::uint64_t seed = 42;

  void validate() const;
};

struct TrainLog {
  double final_loss = 0.0;
  int epochs = 0;
  std::uint64_t seed = 0;
};

// Multinomial logistic regression over hashed n-gram features; stands in for
// the fine-tuned corrector models behind the same contract.
struct CorrectorModel {
  FeatureConfig features;
  std::string task_id;
  std::vector<std::string> input_fields;
  std::vector<std::string> label_space;
  std::vector<std::vector<double>> weights;  // classes x hash_dim
  std::vector<double> bias;                  // classes
  TrainLog train_log;

  std::string to_json() const;
  static CorrectorModel from_json_text(const std::string& text);
};

CorrectorModel load_corrector(const std::string& path);
void save_corrector(const CorrectorModel& model, const std::string& path);

using Example = std::pair<SparseVec, int>;  // (features, class index)

struct Gradient {
  std::vector<std::vector<double>> weights;
  std::vector<double> bias;
};

struct LossAndGradient {
  double loss = 0.0;
  Gradient gradient;
};

// loss = mean(-log softmax(Wx+b)[y]) + (l2/2)*||W||^2; the gradient is its
// exact derivative. Errors: EmptyBatch, ClassIndexOutOfRange.
LossAndGradient loss_and_gradient(const CorrectorModel& model, std::span<const Example> batch,
                                  double l2_penalty);

// Mini-batch gradient descent with seeded shuffling and a fixed accumulation
// order; byte-deterministic for fixed inputs. Errors: MissingClass,
// GenerationTaskUnsupported, EmptyDataset.
CorrectorModel train_corrector(const Dataset& exemplars, const TaskSpec& spec,
                               const FeatureConfig& fcfg, const TrainConfig& tcfg);

struct Prediction {
  std::string label;
  int label_index = 0;
  std::vector<double> confidences;  // softmax over label_space
};

// Input = fields concatenated in input_fields order joined by newlines.
// Argmax ties break toward the lowest label-space index.
Prediction predict(const CorrectorModel& model, const Record& record);

// The text predict() featurizes for a record.
std::string record_input_text(const Record& record,
                              const std::vector<std::string>& input_fields);

struct CorrectionReport {
  std::size_t total = 0;
  std::size_t changed = 0;
  double flip_rate = 0.0;
  std::optional<double> mean_confidence;                          // classification
  std::vector<std::string> label_space;                           // flip-matrix axes
  std::optional<std::vector<std::vector<std::size_t>>> flip_matrix;  // [raw][corrected]
  std::optional<double> mean_similarity;                          // generation (Rouge-L F)

  std::string to_json() const;
};

// Relabels synthetic_raw records with the corrector's prediction whenever the
// top confidence reaches the threshold; otherwise the original label is
// kept. Provenance becomes synthetic_corrected either way, ids are
// unchanged, and meta.corrector_confidence records the top confidence.
std::pair<Dataset, CorrectionReport> correct_labels(const CorrectorModel& model,
                                                    const Dataset& synthetic,
                                                    double confidence_threshold);

// Generation-task correction through the backend: a few-shot prompt of
// exemplar (input, gold target) pairs plus the record's input asks for a
// corrected target. The report's mean_similarity is the mean Rouge-L F
// between raw and corrected labels.
std::pair<Dataset, CorrectionReport> correct_text_labels(
    const BackendConfig& config, CountingSession& session, const Dataset& exemplars,
    const Dataset& synthetic, const PromptTemplate& tpl, std::size_t exemplars_per_prompt = 5);

}  // namespace synthline
