#include "synthline/corrector.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "synthline/concurrency.hpp"
#include "synthline/errors.hpp"
#include "synthline/hash.hpp"
#include "synthline/metrics.hpp"
#include "synthline/text.hpp"

namespace synthline {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kUnigramKey = 0x5f3c6a1d9e8b7041ull;
constexpr std::uint64_t kBigramKey = 0xa7c4e19b3d5f8026ull;

std::vector<double> softmax(const std::vector<double>& logits) {
  double m = logits[0];
  for (double v : logits) {
    m = std::max(m, v);
  }
  double sum = 0.0;
  std::vector<double> out(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - m);
    sum += out[i];
  }
  for (double& v : out) {
    v /= sum;
  }
  return out;
}

std::vector<double> logits_for(const CorrectorModel& model, const SparseVec& x) {
  std::vector<double> logits(model.bias);
  for (std::size_t c = 0; c < logits.size(); ++c) {
    const auto& row = model.weights[c];
    double dot = 0.0;
    for (const auto& [idx, val] : x) {
      dot += row[idx] * val;
    }
    logits[c] += dot;
  }
  return logits;
}

double mean_cross_entropy(const CorrectorModel& model, std::span<const Example> data) {
  double total = 0.0;
  for (const auto& [x, y] : data) {
    const std::vector<double> logits = logits_for(model, x);
    double m = logits[0];
    for (double v : logits) m = std::max(m, v);
    double lse = 0.0;
    for (double v : logits) lse += std::exp(v - m);
    total += m + std::log(lse) - logits[static_cast<std::size_t>(y)];
  }
  return total / static_cast<double>(data.size());
}

double weight_penalty(const CorrectorModel& model, double l2) {
  double sq = 0.0;
  for (const auto& row : model.weights) {
    for (double w : row) {
      sq += w * w;
    }
  }
  return 0.5 * l2 * sq;
}

}  // namespace

void FeatureConfig::validate() const {
  if (!unigrams && !bigrams) {
    throw ConfigError("ConfigSchemaError", "at least one n-gram order must be enabled");
  }
  if (hash_dim < (1u << 10) || (hash_dim & (hash_dim - 1)) != 0) {
    throw ConfigError("ConfigSchemaError", "hash_dim must be a power of two >= 1024");
  }
}

void TrainConfig::validate() const {
  if (epochs < 1 || batch_size < 1 || learning_rate <= 0.0 || l2_penalty < 0.0) {
    throw ConfigError("ConfigSchemaError", "training parameters must be positive");
  }
}

SparseVec featurize(std::string_view text, const FeatureConfig& cfg) {
  cfg.validate();
  const std::vector<std::string> tokens =
      cfg.lowercase ? word_tokens(text) : word_tokens_cased(text);
  const std::uint32_t mask = cfg.hash_dim - 1;
  std::map<std::uint32_t, double> counts;
  if (cfg.unigrams) {
    for (const auto& t : tokens) {
      counts[static_cast<std::uint32_t>(keyed_hash64(kUnigramKey, t)) & mask] += 1.0;
    }
  }
  if (cfg.bigrams) {
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      const std::string gram = tokens[i] + '\x1f' + tokens[i + 1];
      counts[static_cast<std::uint32_t>(keyed_hash64(kBigramKey, gram)) & mask] += 1.0;
    }
  }
  SparseVec out(counts.begin(), counts.end());
  if (cfg.l2_normalize && !out.empty()) {
    double sq = 0.0;
    for (const auto& [idx, val] : out) {
      (void)idx;
      sq += val * val;
    }
    const double norm = std::sqrt(sq);
    for (auto& [idx, val] : out) {
      (void)idx;
      val /= norm;
    }
  }
  return out;
}

std::string CorrectorModel::to_json() const {
  ordered_json j;
  j["version"] = 1;
  j["features"] = {{"unigrams", features.unigrams},
                   {"bigrams", features.bigrams},
                   {"hash_dim", features.hash_dim},
                   {"lowercase", features.lowercase},
                   {"l2_normalize", features.l2_normalize}};
  j["task_id"] = task_id;
  j["input_fields"] = input_fields;
  j["label_space"] = label_space;
  // Weights are stored sparsely; unseen buckets stay exactly zero through
  // training, so this loses nothing.
  ordered_json rows = ordered_json::array();
  for (const auto& row : weights) {
    ordered_json entries = ordered_json::array();
    for (std::uint32_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0.0) {
        entries.push_back(ordered_json::array({i, row[i]}));
      }
    }
    rows.push_back(std::move(entries));
  }
  j["weights"] = std::move(rows);
  j["bias"] = bias;
  j["train_log"] = {{"final_loss", train_log.final_loss},
                    {"epochs", train_log.epochs},
                    {"seed", train_log.seed}};
  return j.dump();
}

CorrectorModel CorrectorModel::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("corrector model: ") + e.what());
  }
  CorrectorModel m;
  try {
    if (j.at("version").get<int>() != 1) {
      throw Error("ModelVersionError", "unsupported corrector model version");
    }
    const auto& f = j.at("features");
    m.features.unigrams = f.at("unigrams").get<bool>();
    m.features.bigrams = f.at("bigrams").get<bool>();
    m.features.hash_dim = f.at("hash_dim").get<std::uint32_t>();
    m.features.lowercase = f.at("lowercase").get<bool>();
    m.features.l2_normalize = f.at("l2_normalize").get<bool>();
    m.task_id = j.at("task_id").get<std::string>();
    m.input_fields = j.at("input_fields").get<std::vector<std::string>>();
    m.label_space = j.at("label_space").get<std::vector<std::string>>();
    m.bias = j.at("bias").get<std::vector<double>>();
    for (const auto& row : j.at("weights")) {
      std::vector<double> dense(m.features.hash_dim, 0.0);
      for (const auto& entry : row) {
        dense[entry.at(0).get<std::uint32_t>()] = entry.at(1).get<double>();
      }
      m.weights.push_back(std::move(dense));
    }
    m.train_log.final_loss = j.at("train_log").at("final_loss").get<double>();
    m.train_log.epochs = j.at("train_log").at("epochs").get<int>();
    m.train_log.seed = j.at("train_log").at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ValidationError("ModelSchemaError", "", std::string("corrector model: ") + e.what());
  }
  if (m.weights.size() != m.label_space.size() || m.bias.size() != m.label_space.size()) {
    throw ValidationError("ModelSchemaError", "weights",
                          "weight rows must match the label space");
  }
  return m;
}

CorrectorModel load_corrector(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open corrector model: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return CorrectorModel::from_json_text(buf.str());
}

void save_corrector(const CorrectorModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write corrector model: " + path);
  }
  out << model.to_json() << "\n";
}

LossAndGradient loss_and_gradient(const CorrectorModel& model, std::span<const Example> batch,
                                  double l2_penalty) {
  if (batch.empty()) {
    throw Error("EmptyBatch", "loss_and_gradient requires a non-empty batch");
  }
  const std::size_t classes = model.label_space.size();
  const std::size_t dim = model.features.hash_dim;
  for (const auto& [x, y] : batch) {
    (void)x;
    if (y < 0 || static_cast<std::size_t>(y) >= classes) {
      throw Error("ClassIndexOutOfRange", "class index " + std::to_string(y) +
                                              " outside [0," + std::to_string(classes) + ")");
    }
  }
  LossAndGradient out;
  out.gradient.weights.assign(classes, std::vector<double>(dim, 0.0));
  out.gradient.bias.assign(classes, 0.0);
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  double data_loss = 0.0;
  for (const auto& [x, y] : batch) {
    const std::vector<double> logits = logits_for(model, x);
    const std::vector<double> probs = softmax(logits);
    data_loss -= std::log(probs[static_cast<std::size_t>(y)]);
    for (std::size_t c = 0; c < classes; ++c) {
      const double coef = (probs[c] - (static_cast<int>(c) == y ? 1.0 : 0.0)) * inv_n;
      out.gradient.bias[c] += coef;
      auto& row = out.gradient.weights[c];
      for (const auto& [idx, val] : x) {
        row[idx] += coef * val;
      }
    }
  }
  out.loss = data_loss * inv_n + weight_penalty(model, l2_penalty);
  for (std::size_t c = 0; c < classes; ++c) {
    const auto& w = model.weights[c];
    auto& g = out.gradient.weights[c];
    for (std::size_t d = 0; d < dim; ++d) {
      g[d] += l2_penalty * w[d];
    }
  }
  return out;
}

std::string record_input_text(const Record& record,
                              const std::vector<std::string>& input_fields) {
  std::string text;
  for (std::size_t i = 0; i < input_fields.size(); ++i) {
    if (i) text += '\n';
    auto it = record.fields.find(input_fields[i]);
    if (it != record.fields.end()) {
      text += it->second;
    }
  }
  return text;
}

CorrectorModel train_corrector(const Dataset& exemplars, const TaskSpec& spec,
                               const FeatureConfig& fcfg, const TrainConfig& tcfg) {
  fcfg.validate();
  tcfg.validate();
  if (spec.kind != TaskKind::classification) {
    throw Error("GenerationTaskUnsupported",
                "the built-in corrector only trains on classification tasks");
  }
  if (exemplars.empty()) {
    throw Error("EmptyDataset", "corrector training needs exemplars");
  }
  std::map<std::string, std::size_t> per_class;
  for (const auto& r : exemplars.records()) {
    ++per_class[r.label];
  }
  for (const auto& label : spec.label_space) {
    if (!per_class.count(label)) {
      throw Error("MissingClass", "class '" + label + "' has no exemplars");
    }
  }

  const std::size_t classes = spec.label_space.size();
  std::vector<Example> data;
  data.reserve(exemplars.size());
  for (const auto& r : exemplars.records()) {
    data.emplace_back(featurize(record_input_text(r, spec.input_fields), fcfg),
                      spec.label_index(r.label));
  }

  CorrectorModel model;
  model.features = fcfg;
  model.task_id = spec.task_id;
  model.input_fields = spec.input_fields;
  model.label_space = spec.label_space;
  model.weights.assign(classes, std::vector<double>(fcfg.hash_dim, 0.0));
  model.bias.assign(classes, 0.0);

  DeterministicRng rng(mix64(tcfg.seed));
  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }

  const std::size_t batch_size = static_cast<std::size_t>(tcfg.batch_size);
  std::uint64_t step = 0;
  for (int epoch = 0; epoch < tcfg.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {  // Fisher-Yates, portable
      std::swap(order[i - 1], order[rng.below(i)]);
    }
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
      const std::size_t end = std::min(start + batch_size, order.size());
      const double inv_b = 1.0 / static_cast<double>(end - start);
      ++step;
      const double lr = tcfg.learning_rate / std::sqrt(static_cast<double>(step));

      // Probabilities are taken at the pre-update weights.
      std::vector<std::vector<double>> probs;
      probs.reserve(end - start);
      for (std::size_t i = start; i < end; ++i) {
        probs.push_back(softmax(logits_for(model, data[order[i]].first)));
      }
      // Exact step: W <- W(1 - lr*l2) - lr * dData; bias has no penalty.
      const double decay = 1.0 - lr * tcfg.l2_penalty;
      for (auto& row : model.weights) {
        for (double& w : row) {
          w *= decay;
        }
      }
      for (std::size_t i = start; i < end; ++i) {
        const auto& [x, y] = data[order[i]];
        const auto& p = probs[i - start];
        for (std::size_t c = 0; c < classes; ++c) {
          const double coef = (p[c] - (static_cast<int>(c) == y ? 1.0 : 0.0)) * inv_b;
          model.bias[c] -= lr * coef;
          auto& row = model.weights[c];
          for (const auto& [idx, val] : x) {
            row[idx] -= lr * coef * val;
          }
        }
      }
    }
  }

  model.train_log.final_loss =
      mean_cross_entropy(model, data) + weight_penalty(model, tcfg.l2_penalty);
  model.train_log.epochs = tcfg.epochs;
  model.train_log.seed = tcfg.seed;
  return model;
}

Prediction predict(const CorrectorModel& model, const Record& record) {
  const SparseVec x = featurize(record_input_text(record, model.input_fields), model.features);
  const std::vector<double> probs = softmax(logits_for(model, x));
  Prediction p;
  p.confidences = probs;
  p.label_index = 0;
  for (std::size_t c = 1; c < probs.size(); ++c) {
    if (probs[c] > probs[static_cast<std::size_t>(p.label_index)]) {
      p.label_index = static_cast<int>(c);
    }
  }
  p.label = model.label_space[static_cast<std::size_t>(p.label_index)];
  return p;
}

std::string CorrectionReport::to_json() const {
  ordered_json j;
  j["total"] = total;
  j["changed"] = changed;
  j["flip_rate"] = flip_rate;
  if (mean_confidence) {
    j["mean_confidence"] = *mean_confidence;
  }
  if (flip_matrix) {
    j["label_space"] = label_space;
    j["flip_matrix"] = *flip_matrix;
  }
  if (mean_similarity) {
    j["mean_similarity"] = *mean_similarity;
  }
  return j.dump();
}

std::pair<Dataset, CorrectionReport> correct_labels(const CorrectorModel& model,
                                                    const Dataset& synthetic,
                                                    double confidence_threshold) {
  if (confidence_threshold < 0.0 || confidence_threshold > 1.0) {
    throw Error("InvalidThreshold", "confidence_threshold must be in [0,1]");
  }
  if (synthetic.task().task_id != model.task_id ||
      synthetic.task().label_space != model.label_space) {
    throw Error("TaskMismatch", "corrector was trained for task '" + model.task_id + "'");
  }
  for (const auto& r : synthetic.records()) {
    if (r.provenance != Provenance::synthetic_raw) {
      throw Error("ProvenanceError",
                  "correct_labels expects synthetic_raw records (got " +
                      to_string(r.provenance) + " for " + r.id + ")");
    }
  }

  const std::size_t classes = model.label_space.size();
  CorrectionReport report;
  report.total = synthetic.size();
  report.label_space = model.label_space;
  report.flip_matrix.emplace(classes, std::vector<std::size_t>(classes, 0));

  std::vector<Record> out;
  out.reserve(synthetic.size());
  double confidence_sum = 0.0;
  for (const auto& r : synthetic.records()) {
    const Prediction p = predict(model, r);
    const double top = p.confidences[static_cast<std::size_t>(p.label_index)];
    confidence_sum += top;
    Record corrected = r;
    if (top >= confidence_threshold) {
      corrected.label = p.label;
    }
    corrected.provenance = Provenance::synthetic_corrected;
    corrected.meta.corrector_confidence = top;
    const int raw_idx = synthetic.task().label_index(r.label);
    const int new_idx = synthetic.task().label_index(corrected.label);
    ++(*report.flip_matrix)[static_cast<std::size_t>(raw_idx)][static_cast<std::size_t>(new_idx)];
    if (corrected.label != r.label) {
      ++report.changed;
    }
    out.push_back(std::move(corrected));
  }
  report.flip_rate = report.total == 0
                         ? 0.0
                         : static_cast<double>(report.changed) / static_cast<double>(report.total);
  report.mean_confidence =
      report.total == 0 ? 0.0 : confidence_sum / static_cast<double>(report.total);
  return {Dataset::make(synthetic.task(), std::move(out)), report};
}

std::pair<Dataset, CorrectionReport> correct_text_labels(
    const BackendConfig& config, CountingSession& session, const Dataset& exemplars,
    const Dataset& synthetic, const PromptTemplate& tpl, std::size_t exemplars_per_prompt) {
  if (synthetic.task().kind != TaskKind::generation) {
    throw Error("TaskKindUnsupported", "correct_text_labels requires a generation task");
  }
  if (exemplars.task().task_id != synthetic.task().task_id) {
    throw Error("TaskMismatch", "exemplars and synthetic records belong to different tasks");
  }
  for (const auto& r : synthetic.records()) {
    if (r.provenance != Provenance::synthetic_raw) {
      throw Error("ProvenanceError", "correct_text_labels expects synthetic_raw records");
    }
  }
  const std::size_t k = std::min(exemplars_per_prompt, exemplars.size());
  const auto& fields = synthetic.task().input_fields;

  auto request_for = [&](std::uint64_t index) {
    const Record& r = synthetic.records()[index];
    std::map<std::string, std::string> extra;
    extra["document"] = record_input_text(r, fields);
    extra["draft"] = r.label;
    ChatRequest req;
    req.system_text = tpl.system_text;
    req.user_text = render_prompt(tpl, synthetic.task(),
                                  std::span<const Record>(exemplars.records()), k, extra);
    req.request_index = index;
    req.model_name = config.model_name;
    req.temperature = 0.0;  // corrections are rewrites, not sampling
    req.max_tokens = config.max_tokens;
    return req;
  };

  CorrectionReport report;
  report.total = synthetic.size();
  std::vector<Record> out;
  out.reserve(synthetic.size());
  double similarity_sum = 0.0;

  OrderedParallelRunner runner(config.max_concurrency, 0, synthetic.size());
  runner.run(
      [&](std::uint64_t index) {
        try {
          return session.complete(request_for(index));
        } catch (const Error& e) {
          throw Error(e.kind(), "request " + std::to_string(index) + ": " + e.what());
        }
      },
      [&](std::uint64_t index, std::string&& text) {
        const Record& src = synthetic.records()[index];
        const std::string corrected = trim(text);
        if (corrected.empty()) {
          throw Error("EmptyCorrection",
                      "backend returned a blank correction for record " + src.id);
        }
        Record r = src;
        r.label = corrected;
        r.provenance = Provenance::synthetic_corrected;
        r.meta.prompt_hash = prompt_hash(request_for(index));
        if (r.label != src.label) {
          ++report.changed;
        }
        similarity_sum += rouge_l(corrected, src.label).f;
        out.push_back(std::move(r));
        return true;
      });

  report.flip_rate = report.total == 0
                         ? 0.0
                         : static_cast<double>(report.changed) / static_cast<double>(report.total);
  report.mean_similarity =
      report.total == 0 ? 1.0 : similarity_sum / static_cast<double>(report.total);
  return {Dataset::make(synthetic.task(), std::move(out)), report};
}

}  // namespace synthline
