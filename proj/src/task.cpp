#include "synthline/task.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "synthline/errors.hpp"

namespace synthline {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(TaskKind kind) {
  return kind == TaskKind::classification ? "classification" : "generation";
}

std::string to_string(MetricName metric) {
  return metric == MetricName::macro_f1 ? "macro_f1" : "rouge_l";
}

TaskKind task_kind_from_string(const std::string& s) {
  if (s == "classification") return TaskKind::classification;
  if (s == "generation") return TaskKind::generation;
  throw ValidationError("TaskSpecError", "kind", "unknown task kind: " + s);
}

MetricName metric_from_string(const std::string& s) {
  if (s == "macro_f1") return MetricName::macro_f1;
  if (s == "rouge_l") return MetricName::rouge_l;
  throw ValidationError("TaskSpecError", "metric", "unknown metric: " + s);
}

void TaskSpec::validate() const {
  if (task_id.empty()) {
    throw ValidationError("TaskSpecError", "task_id", "task_id must be non-empty");
  }
  if (input_fields.empty()) {
    throw ValidationError("TaskSpecError", "input_fields", "input_fields must be non-empty");
  }
  std::set<std::string> seen;
  for (const auto& f : input_fields) {
    if (f.empty()) {
      throw ValidationError("TaskSpecError", "input_fields", "input field name must be non-empty");
    }
    if (!seen.insert(f).second) {
      throw ValidationError("TaskSpecError", f, "duplicate input field: " + f);
    }
  }
  if (kind == TaskKind::classification) {
    if (label_space.size() < 2) {
      throw ValidationError("TaskSpecError", "label_space",
                            "classification tasks need at least 2 labels");
    }
    std::set<std::string> labels;
    for (const auto& l : label_space) {
      if (l.empty() || !labels.insert(l).second) {
        throw ValidationError("TaskSpecError", "label_space",
                              "labels must be non-empty and unique");
      }
    }
    if (metric != MetricName::macro_f1) {
      throw ValidationError("TaskSpecError", "metric",
                            "classification tasks use metric macro_f1");
    }
  } else {
    if (!label_space.empty()) {
      throw ValidationError("TaskSpecError", "label_space",
                            "generation tasks must have an empty label_space");
    }
    if (metric != MetricName::rouge_l) {
      throw ValidationError("TaskSpecError", "metric", "generation tasks use metric rouge_l");
    }
  }
}

int TaskSpec::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < label_space.size(); ++i) {
    if (label_space[i] == label) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

std::string TaskSpec::to_json() const {
  ordered_json j;
  j["task_id"] = task_id;
  j["kind"] = to_string(kind);
  j["input_fields"] = input_fields;
  j["label_space"] = label_space;
  j["metric"] = to_string(metric);
  return j.dump();
}

TaskSpec TaskSpec::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("task spec: ") + e.what());
  }
  if (!j.is_object()) {
    throw ValidationError("TaskSpecError", "", "task spec must be a JSON object");
  }
  static const std::set<std::string> allowed = {"task_id", "kind", "input_fields",
                                                "label_space", "metric"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) {
      throw ValidationError("TaskSpecError", key, "unknown task spec key: " + key);
    }
  }
  TaskSpec spec;
  try {
    spec.task_id = j.at("task_id").get<std::string>();
    spec.kind = task_kind_from_string(j.at("kind").get<std::string>());
    spec.input_fields = j.at("input_fields").get<std::vector<std::string>>();
    if (j.contains("label_space")) {
      spec.label_space = j.at("label_space").get<std::vector<std::string>>();
    }
    spec.metric = metric_from_string(j.at("metric").get<std::string>());
  } catch (const json::exception& e) {
    throw ValidationError("TaskSpecError", "", std::string("task spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

TaskSpec load_task_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open task spec: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return TaskSpec::from_json_text(buf.str());
}

void save_task_spec(const TaskSpec& spec, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write task spec: " + path);
  }
  out << spec.to_json() << "\n";
  if (!out) {
    throw IoError("failed writing task spec: " + path);
  }
}

}  // namespace synthline
