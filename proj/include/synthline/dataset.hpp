#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "synthline/record.hpp"
#include "synthline/task.hpp"

namespace synthline {

// Ordered, validated, immutable collection of records with a content digest.
class Dataset {
 public:
  // Validates every record against the task, rejects duplicate ids, and
  // computes the digest of the canonical serialization.
  static Dataset make(TaskSpec task, std::vector<Record> records);

  const TaskSpec& task() const { return task_; }
  const std::vector<Record>& records() const { return records_; }
  const std::string& digest() const { return digest_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // The exact bytes save_dataset writes: one canonical JSONL line per record,
  // "\n" endings, nothing else.
  std::string canonical_bytes() const;

 private:
  Dataset() = default;
  TaskSpec task_;
  std::vector<Record> records_;
  std::string digest_;
};

struct DatasetStats {
  std::size_t total = 0;
  std::map<std::string, std::size_t> per_label;  // classification only
  std::map<std::string, std::size_t> per_provenance;
};

// Reads JSONL: one record per non-blank line, order preserved, blank lines
// ignored. Throws ParseError(line), ValidationError (message carries the
// line), or Error("DuplicateId").
Dataset load_dataset(const std::string& path, const TaskSpec& spec);

// Writes the canonical bytes. Deterministic: equal datasets produce
// byte-identical files.
void save_dataset(const Dataset& dataset, const std::string& path);

DatasetStats dataset_stats(const Dataset& dataset);

std::string stats_to_json(const DatasetStats& stats);

}  // namespace synthline
