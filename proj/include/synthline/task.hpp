#pragma once

#include <string>
#include <vector>

namespace synthline {

enum class TaskKind { classification, generation };

enum class MetricName { macro_f1, rouge_l };

std::string to_string(TaskKind kind);
std::string to_string(MetricName metric);
TaskKind task_kind_from_string(const std::string& s);
MetricName metric_from_string(const std::string& s);

// Task identity and schema. Every dataset, prompt, and metric in the
// pipeline is interpreted against one of these.
struct TaskSpec {
  std::string task_id;
  TaskKind kind = TaskKind::classification;
  std::vector<std::string> input_fields;
  std::vector<std::string> label_space;  // classification only
  MetricName metric = MetricName::macro_f1;

  // Throws ValidationError (kind "TaskSpecError") when any invariant fails:
  // classification needs >= 2 unique labels and macro_f1; generation needs an
  // empty label space and rouge_l; input fields must be non-empty and unique.
  void validate() const;

  bool operator==(const TaskSpec& other) const = default;

  // Index of label in label_space, or -1.
  int label_index(const std::string& label) const;

  std::string to_json() const;
  static TaskSpec from_json_text(const std::string& text);
};

TaskSpec load_task_spec(const std::string& path);
void save_task_spec(const TaskSpec& spec, const std::string& path);

}  // namespace synthline
