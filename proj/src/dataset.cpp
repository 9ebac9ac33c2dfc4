#include "synthline/dataset.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "synthline/errors.hpp"
#include "synthline/hash.hpp"
#include "synthline/text.hpp"

namespace synthline {

Dataset Dataset::make(TaskSpec task, std::vector<Record> records) {
  task.validate();
  std::set<std::string> ids;
  for (const auto& r : records) {
    validate_record(r, task);
    if (!ids.insert(r.id).second) {
      throw Error("DuplicateId", "duplicate record id: " + r.id);
    }
  }
  Dataset d;
  d.task_ = std::move(task);
  d.records_ = std::move(records);
  d.digest_ = sha256_hex(d.canonical_bytes());
  return d;
}

std::string Dataset::canonical_bytes() const {
  std::string out;
  for (const auto& r : records_) {
    out += record_to_jsonl(r, task_);
    out += '\n';
  }
  return out;
}

Dataset load_dataset(const std::string& path, const TaskSpec& spec) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open dataset: " + path);
  }
  std::vector<Record> records;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) {
      continue;
    }
    Record r;
    try {
      r = record_from_jsonl(line);
      validate_record(r, spec);
    } catch (const ParseError& e) {
      throw ParseError(line_no, path + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(e.kind(), e.key(),
                            path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!ids.insert(r.id).second) {
      throw Error("DuplicateId",
                  path + ":" + std::to_string(line_no) + ": duplicate record id: " + r.id);
    }
    records.push_back(std::move(r));
  }
  return Dataset::make(spec, std::move(records));
}

void save_dataset(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write dataset: " + path);
  }
  const std::string bytes = dataset.canonical_bytes();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("failed writing dataset: " + path);
  }
}

DatasetStats dataset_stats(const Dataset& dataset) {
  DatasetStats stats;
  stats.total = dataset.size();
  for (const auto& r : dataset.records()) {
    if (dataset.task().kind == TaskKind::classification) {
      ++stats.per_label[r.label];
    }
    ++stats.per_provenance[to_string(r.provenance)];
  }
  return stats;
}

std::string stats_to_json(const DatasetStats& stats) {
  nlohmann::ordered_json j;
  j["total"] = stats.total;
  j["per_label"] = stats.per_label;
  j["per_provenance"] = stats.per_provenance;
  return j.dump();
}

}  // namespace synthline
