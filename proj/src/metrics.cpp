#include "synthline/metrics.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "synthline/errors.hpp"
#include "synthline/text.hpp"

namespace synthline {

std::size_t ConfusionMatrix::total() const {
  std::size_t t = 0;
  for (const auto& row : counts) {
    for (std::size_t c : row) {
      t += c;
    }
  }
  return t;
}

ConfusionMatrix confusion_matrix(std::span<const std::string> gold,
                                 std::span<const std::string> pred,
                                 const std::vector<std::string>& space) {
  if (gold.size() != pred.size()) {
    throw Error("LengthMismatch", "gold has " + std::to_string(gold.size()) +
                                      " labels, predictions " + std::to_string(pred.size()));
  }
  if (gold.empty()) {
    throw Error("EmptyInput", "cannot build a confusion matrix from zero pairs");
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < space.size(); ++i) {
    index[space[i]] = i;
  }
  ConfusionMatrix cm;
  cm.label_space = space;
  cm.counts.assign(space.size(), std::vector<std::size_t>(space.size(), 0));
  for (std::size_t i = 0; i < gold.size(); ++i) {
    auto g = index.find(gold[i]);
    auto p = index.find(pred[i]);
    if (g == index.end()) {
      throw ValidationError("LabelOutOfSpace", "gold", "gold label not in space: " + gold[i]);
    }
    if (p == index.end()) {
      throw ValidationError("LabelOutOfSpace", "pred",
                            "predicted label not in space: " + pred[i]);
    }
    ++cm.counts[g->second][p->second];
  }
  return cm;
}

std::vector<PerClassScore> per_class_scores(const ConfusionMatrix& cm) {
  const std::size_t n = cm.label_space.size();
  std::vector<PerClassScore> out(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t tp = cm.counts[c][c];
    std::size_t fp = 0;
    std::size_t fn = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != c) {
        fp += cm.counts[k][c];
        fn += cm.counts[c][k];
      }
    }
    PerClassScore& s = out[c];
    s.precision = (tp + fp) == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    s.recall = (tp + fn) == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    s.f1 = (s.precision + s.recall) == 0.0
               ? 0.0
               : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return out;
}

double macro_f1(const ConfusionMatrix& cm) {
  const auto scores = per_class_scores(cm);
  if (scores.empty()) {
    return 0.0;
  }
  double sum = 0.0;
  for (const auto& s : scores) {
    sum += s.f1;
  }
  return sum / static_cast<double>(scores.size());
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) {
    return 0;
  }
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
  const std::vector<std::string> cand = word_tokens(candidate);
  const std::vector<std::string> ref = word_tokens(reference);
  RougeScore s;
  if (cand.empty() || ref.empty()) {
    return s;
  }
  const double l = static_cast<double>(lcs_length(cand, ref));
  s.precision = l / static_cast<double>(cand.size());
  s.recall = l / static_cast<double>(ref.size());
  s.f = (s.precision + s.recall) == 0.0
            ? 0.0
            : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string MetricReport::to_json() const {
  std::string out = "{\"metric\":" + nlohmann::json(metric).dump() +
                    ",\"value\":" + format_fixed6(value) + ",\"n\":" + std::to_string(n);
  if (!per_class.empty()) {
    out += ",\"per_class\":[";
    for (std::size_t i = 0; i < per_class.size(); ++i) {
      if (i) out += ',';
      const auto& [label, s] = per_class[i];
      out += "{\"label\":" + nlohmann::json(label).dump() +
             ",\"precision\":" + format_fixed6(s.precision) +
             ",\"recall\":" + format_fixed6(s.recall) + ",\"f1\":" + format_fixed6(s.f1) + "}";
    }
    out += ']';
  }
  if (!per_pair.empty()) {
    out += ",\"per_pair\":[";
    for (std::size_t i = 0; i < per_pair.size(); ++i) {
      if (i) out += ',';
      const auto& [id, s] = per_pair[i];
      out += "{\"id\":" + nlohmann::json(id).dump() +
             ",\"precision\":" + format_fixed6(s.precision) +
             ",\"recall\":" + format_fixed6(s.recall) + ",\"f\":" + format_fixed6(s.f) + "}";
    }
    out += ']';
  }
  out += '}';
  return out;
}

MetricReport evaluate(const TaskSpec& spec,
                      const std::map<std::string, std::string>& predictions,
                      const Dataset& gold) {
  if (gold.empty()) {
    throw Error("EmptyDataset", "cannot evaluate against an empty gold set");
  }
  for (const auto& r : gold.records()) {
    if (!predictions.count(r.id)) {
      throw Error("MissingPrediction", "no prediction for record " + r.id);
    }
  }
  if (predictions.size() != gold.size()) {
    for (const auto& [id, label] : predictions) {
      (void)label;
      bool found = false;
      for (const auto& r : gold.records()) {
        if (r.id == id) {
          found = true;
          break;
        }
      }
      if (!found) {
        throw Error("ExtraPrediction", "prediction for unknown record " + id);
      }
    }
  }

  MetricReport report;
  report.metric = to_string(spec.metric);
  report.n = gold.size();
  if (spec.kind == TaskKind::classification) {
    std::vector<std::string> g;
    std::vector<std::string> p;
    g.reserve(gold.size());
    p.reserve(gold.size());
    for (const auto& r : gold.records()) {
      g.push_back(r.label);
      p.push_back(predictions.at(r.id));
    }
    const ConfusionMatrix cm = confusion_matrix(g, p, spec.label_space);
    report.value = macro_f1(cm);
    const auto scores = per_class_scores(cm);
    for (std::size_t c = 0; c < scores.size(); ++c) {
      report.per_class.emplace_back(spec.label_space[c], scores[c]);
    }
  } else {
    double sum = 0.0;
    for (const auto& r : gold.records()) {
      const RougeScore s = rouge_l(predictions.at(r.id), r.label);
      report.per_pair.emplace_back(r.id, s);
      sum += s.f;
    }
    report.value = sum / static_cast<double>(gold.size());
  }
  return report;
}

}  // namespace synthline
