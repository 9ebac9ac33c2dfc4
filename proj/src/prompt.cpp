#include "synthline/prompt.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "synthline/errors.hpp"

namespace synthline {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Substitute {name} placeholders from `bind`; unknown names throw.
std::string substitute(const std::string& pattern,
                       const std::map<std::string, std::string>& bind) {
  std::string out;
  out.reserve(pattern.size());
  std::size_t i = 0;
  while (i < pattern.size()) {
    char c = pattern[i];
    if (c != '{') {
      out.push_back(c);
      ++i;
      continue;
    }
    std::size_t close = pattern.find('}', i + 1);
    if (close == std::string::npos) {
      throw Error("UnboundPlaceholder", "unterminated placeholder in template");
    }
    std::string name = pattern.substr(i + 1, close - i - 1);
    auto it = bind.find(name);
    if (it == bind.end()) {
      throw Error("UnboundPlaceholder", "unbound placeholder: {" + name + "}");
    }
    out += it->second;
    i = close + 1;
  }
  return out;
}

}  // namespace

std::string PromptTemplate::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["system_text"] = system_text;
  j["instruction_text"] = instruction_text;
  j["exemplar_format"] = exemplar_format;
  return j.dump(2);
}

PromptTemplate PromptTemplate::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("prompt template: ") + e.what());
  }
  static const std::set<std::string> allowed = {"name", "system_text", "instruction_text",
                                                "exemplar_format"};
  if (!j.is_object()) {
    throw ValidationError("TemplateError", "", "prompt template must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) {
      throw ValidationError("TemplateError", key, "unknown template key: " + key);
    }
  }
  PromptTemplate tpl;
  try {
    tpl.name = j.at("name").get<std::string>();
    tpl.system_text = j.value("system_text", "");
    tpl.instruction_text = j.at("instruction_text").get<std::string>();
    tpl.exemplar_format = j.value("exemplar_format", "");
  } catch (const json::exception& e) {
    throw ValidationError("TemplateError", "", std::string("prompt template: ") + e.what());
  }
  return tpl;
}

PromptTemplate load_template(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open prompt template: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return PromptTemplate::from_json_text(buf.str());
}

void save_template(const PromptTemplate& tpl, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write prompt template: " + path);
  }
  out << tpl.to_json() << "\n";
}

std::string format_spec_for(const TaskSpec& spec) {
  std::string keys;
  for (const auto& f : spec.input_fields) {
    keys += "\"" + f + "\", ";
  }
  keys += "\"label\"";
  std::string out = "Return each sample as a single JSON object on its own line with exactly "
                    "these keys: " + keys + ".";
  if (spec.kind == TaskKind::classification) {
    std::string labels;
    for (std::size_t i = 0; i < spec.label_space.size(); ++i) {
      if (i) labels += ", ";
      labels += "\"" + spec.label_space[i] + "\"";
    }
    out += " The \"label\" value must be one of: " + labels + ".";
  } else {
    out += " The \"label\" value is the target text.";
  }
  out += " Output only JSON objects, one per line, with string values.";
  return out;
}

std::string render_exemplar(const PromptTemplate& tpl, const TaskSpec& spec,
                            const Record& record) {
  std::map<std::string, std::string> bind;
  for (const auto& name : spec.input_fields) {
    auto it = record.fields.find(name);
    bind[name] = it == record.fields.end() ? "" : it->second;
  }
  bind["label"] = record.label;
  return substitute(tpl.exemplar_format, bind);
}

std::string render_prompt(const PromptTemplate& tpl, const TaskSpec& spec,
                          std::span<const Record> exemplars, std::size_t k,
                          const std::map<std::string, std::string>& extra) {
  if (k > exemplars.size()) {
    throw Error("TooFewExemplars", "need " + std::to_string(k) + " exemplars, have " +
                                       std::to_string(exemplars.size()));
  }
  std::string block;
  for (std::size_t i = 0; i < k; ++i) {
    if (i) block += "\n\n";
    block += render_exemplar(tpl, spec, exemplars[i]);
  }
  std::map<std::string, std::string> bind = extra;
  bind["k"] = std::to_string(k);
  bind["exemplars"] = block;
  bind["format_spec"] = format_spec_for(spec);
  return substitute(tpl.instruction_text, bind);
}

}  // namespace synthline
