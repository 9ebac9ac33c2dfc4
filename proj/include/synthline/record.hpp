#pragma once

#include <map>
#include <optional>
#include <string>

#include "synthline/task.hpp"

namespace synthline {

enum class Provenance {
  gold,
  synthetic_raw,
  synthetic_corrected,
  summary_gold,
  summary_synthetic,
};

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct RecordMeta {
  std::optional<std::string> generator_model;
  std::optional<std::string> prompt_hash;
  std::optional<double> corrector_confidence;
  std::optional<std::string> parent_id;

  bool empty() const {
    return !generator_model && !prompt_hash && !corrector_confidence && !parent_id;
  }
  bool operator==(const RecordMeta&) const = default;
};

// One labeled example. The id is a content hash over (task, fields) only, so
// relabeling a record preserves its identity.
struct Record {
  std::string id;
  std::string task;
  std::map<std::string, std::string> fields;
  std::string label;
  Provenance provenance = Provenance::gold;
  RecordMeta meta;

  bool operator==(const Record&) const = default;
};

// 64-hex-char digest of the canonical byte encoding: task_id, then each field
// in lexicographic name order as name 0x1F value 0x1E. The label is excluded.
// Throws ValidationError on empty fields or an empty field value.
std::string stable_id(const std::string& task_id,
                      const std::map<std::string, std::string>& fields);

// Convenience constructor: fills id and validates nothing beyond stable_id's
// own checks.
Record make_record(const TaskSpec& spec, std::map<std::string, std::string> fields,
                   std::string label, Provenance provenance, RecordMeta meta = {});

// Checks every record invariant against the task spec. Throws
// ValidationError with kind MissingField, UnknownField, LabelOutOfSpace,
// EmptyLabel, TaskMismatch, EmptyFieldValue, or IdMismatch; the key() names
// the offending field where applicable.
void validate_record(const Record& record, const TaskSpec& spec);

// Canonical single-line JSON form (fixed key order, fields in input_fields
// order, no insignificant whitespace).
std::string record_to_jsonl(const Record& record, const TaskSpec& spec);

// Parses one JSONL line. Strict: exactly the schema keys, string values,
// known meta keys only. Does not run validate_record.
Record record_from_jsonl(const std::string& line);

}  // namespace synthline
