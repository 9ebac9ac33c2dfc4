#include "synthline/record.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "synthline/errors.hpp"
#include "synthline/hash.hpp"
#include "synthline/text.hpp"

namespace synthline {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {
constexpr char kUnitSep = '\x1f';
constexpr char kRecordSep = '\x1e';
}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::gold: return "gold";
    case Provenance::synthetic_raw: return "synthetic_raw";
    case Provenance::synthetic_corrected: return "synthetic_corrected";
    case Provenance::summary_gold: return "summary_gold";
    case Provenance::summary_synthetic: return "summary_synthetic";
  }
  return "gold";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "gold") return Provenance::gold;
  if (s == "synthetic_raw") return Provenance::synthetic_raw;
  if (s == "synthetic_corrected") return Provenance::synthetic_corrected;
  if (s == "summary_gold") return Provenance::summary_gold;
  if (s == "summary_synthetic") return Provenance::summary_synthetic;
  throw ValidationError("ProvenanceError", "provenance", "unknown provenance: " + s);
}

std::string stable_id(const std::string& task_id,
                      const std::map<std::string, std::string>& fields) {
  if (fields.empty()) {
    throw ValidationError("EmptyFields", "fields", "stable_id requires at least one field");
  }
  std::string bytes = task_id;
  for (const auto& [name, value] : fields) {  // std::map iterates in sorted order
    if (value.empty()) {
      throw ValidationError("EmptyFieldValue", name, "empty value for field: " + name);
    }
    bytes += name;
    bytes += kUnitSep;
    bytes += value;
    bytes += kRecordSep;
  }
  return sha256_hex(bytes);
}

Record make_record(const TaskSpec& spec, std::map<std::string, std::string> fields,
                   std::string label, Provenance provenance, RecordMeta meta) {
  Record r;
  r.task = spec.task_id;
  r.id = stable_id(spec.task_id, fields);
  r.fields = std::move(fields);
  r.label = std::move(label);
  r.provenance = provenance;
  r.meta = std::move(meta);
  return r;
}

void validate_record(const Record& record, const TaskSpec& spec) {
  if (record.task != spec.task_id) {
    throw ValidationError("TaskMismatch", "task",
                          "record task '" + record.task + "' does not match '" +
                              spec.task_id + "'");
  }
  for (const auto& name : spec.input_fields) {
    if (!record.fields.count(name)) {
      throw ValidationError("MissingField", name, "missing field: " + name);
    }
  }
  for (const auto& [name, value] : record.fields) {
    if (std::find(spec.input_fields.begin(), spec.input_fields.end(), name) ==
        spec.input_fields.end()) {
      throw ValidationError("UnknownField", name, "unknown field: " + name);
    }
    if (value.empty()) {
      throw ValidationError("EmptyFieldValue", name, "empty value for field: " + name);
    }
  }
  if (spec.kind == TaskKind::classification) {
    if (record.label.empty()) {
      throw ValidationError("EmptyLabel", "label", "empty label");
    }
    if (spec.label_index(record.label) < 0) {
      throw ValidationError("LabelOutOfSpace", "label",
                            "label '" + record.label + "' not in label space");
    }
  } else if (record.label.empty()) {
    throw ValidationError("EmptyLabel", "label", "empty target text");
  }
  if (const auto& c = record.meta.corrector_confidence) {
    if (!(*c >= 0.0 && *c <= 1.0)) {
      throw ValidationError("MetaError", "corrector_confidence",
                            "corrector_confidence out of [0,1]");
    }
  }
  const std::string expect = stable_id(record.task, record.fields);
  if (record.id != expect) {
    throw ValidationError("IdMismatch", "id",
                          "record id does not match content hash (expected " + expect + ")");
  }
}

std::string record_to_jsonl(const Record& record, const TaskSpec& spec) {
  ordered_json j;
  j["id"] = record.id;
  j["task"] = record.task;
  ordered_json fields = ordered_json::object();
  for (const auto& name : spec.input_fields) {
    auto it = record.fields.find(name);
    fields[name] = it == record.fields.end() ? "" : it->second;
  }
  j["fields"] = std::move(fields);
  j["label"] = record.label;
  j["provenance"] = to_string(record.provenance);
  if (record.meta.empty()) {
    j["meta"] = nullptr;
  } else {
    ordered_json meta = ordered_json::object();
    if (record.meta.generator_model) meta["generator_model"] = *record.meta.generator_model;
    if (record.meta.prompt_hash) meta["prompt_hash"] = *record.meta.prompt_hash;
    if (record.meta.corrector_confidence) {
      meta["corrector_confidence"] = *record.meta.corrector_confidence;
    }
    if (record.meta.parent_id) meta["parent_id"] = *record.meta.parent_id;
    j["meta"] = std::move(meta);
  }
  return j.dump();
}

Record record_from_jsonl(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  }
  if (!j.is_object()) {
    throw ParseError(0, "record line is not a JSON object");
  }
  static const std::set<std::string> top = {"id", "task", "fields", "label", "provenance",
                                            "meta"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!top.count(key)) {
      throw ValidationError("UnknownField", key, "unknown record key: " + key);
    }
  }
  for (const auto& key : top) {
    if (!j.contains(key)) {
      throw ValidationError("MissingField", key, "missing record key: " + key);
    }
  }
  Record r;
  try {
    r.id = j.at("id").get<std::string>();
    r.task = j.at("task").get<std::string>();
    if (!j.at("fields").is_object()) {
      throw ValidationError("MissingField", "fields", "fields must be an object");
    }
    for (const auto& [name, value] : j.at("fields").items()) {
      if (!value.is_string()) {
        throw ValidationError("MetaError", name, "field values must be strings");
      }
      r.fields[name] = value.get<std::string>();
    }
    r.label = j.at("label").get<std::string>();
    r.provenance = provenance_from_string(j.at("provenance").get<std::string>());
    const auto& meta = j.at("meta");
    if (!meta.is_null()) {
      if (!meta.is_object()) {
        throw ValidationError("MetaError", "meta", "meta must be an object or null");
      }
      static const std::set<std::string> meta_keys = {"generator_model", "prompt_hash",
                                                      "corrector_confidence", "parent_id"};
      for (const auto& [key, value] : meta.items()) {
        if (!meta_keys.count(key)) {
          throw ValidationError("MetaError", key, "unknown meta key: " + key);
        }
        if (key == "corrector_confidence") {
          if (!value.is_number()) {
            throw ValidationError("MetaError", key, "corrector_confidence must be a number");
          }
          r.meta.corrector_confidence = value.get<double>();
        } else if (!value.is_string()) {
          throw ValidationError("MetaError", key, "meta." + key + " must be a string");
        } else if (key == "generator_model") {
          r.meta.generator_model = value.get<std::string>();
        } else if (key == "prompt_hash") {
          r.meta.prompt_hash = value.get<std::string>();
        } else {
          r.meta.parent_id = value.get<std::string>();
        }
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError("SchemaError", "", std::string("record schema: ") + e.what());
  }
  return r;
}

}  // namespace synthline
