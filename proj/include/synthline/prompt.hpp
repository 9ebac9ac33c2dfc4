#pragma once

#include <map>
#include <span>
#include <string>

#include "synthline/record.hpp"
#include "synthline/task.hpp"

namespace synthline {

// User-supplied few-shot prompt template. instruction_text may reference
// {k} (number of exemplars), {exemplars} (the rendered exemplar block),
// {format_spec} (the required output grammar for this task), and any extra
// binding the caller provides (e.g. {document} for summarization).
// exemplar_format renders one record from its input fields and {label}.
struct PromptTemplate {
  std::string name;
  std::string system_text;
  std::string instruction_text;
  std::string exemplar_format;

  std::string to_json() const;
  static PromptTemplate from_json_text(const std::string& text);
};

PromptTemplate load_template(const std::string& path);
void save_template(const PromptTemplate& tpl, const std::string& path);

// The output grammar substituted for {format_spec}: one JSON object per
// sample with exactly the task's input fields plus "label". The mock backend
// parses this same text, so its phrasing is part of the contract.
std::string format_spec_for(const TaskSpec& spec);

std::string render_exemplar(const PromptTemplate& tpl, const TaskSpec& spec,
                            const Record& record);

// Deterministic substitution; exactly the first k exemplars are rendered in
// the order given, joined by blank lines. Errors: TooFewExemplars,
// UnboundPlaceholder.
std::string render_prompt(const PromptTemplate& tpl, const TaskSpec& spec,
                          std::span<const Record> exemplars, std::size_t k,
                          const std::map<std::string, std::string>& extra = {});

}  // namespace synthline
