#include "synthline/genengine.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "synthline/concurrency.hpp"
#include "synthline/errors.hpp"
#include "synthline/hash.hpp"
#include "synthline/text.hpp"

namespace synthline {

using nlohmann::json;

namespace {

// Balanced {...} regions of `raw`, string- and escape-aware. An unterminated
// region counts as one malformed candidate.
std::vector<std::string> extract_object_candidates(const std::string& raw,
                                                   std::size_t* malformed) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] != '{') {
      ++i;
      continue;
    }
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    std::size_t j = i;
    std::size_t end = std::string::npos;
    for (; j < raw.size(); ++j) {
      char c = raw[j];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (c == '\\') {
          escaped = true;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}') {
        if (--depth == 0) {
          end = j;
          break;
        }
      }
    }
    if (end == std::string::npos) {
      ++*malformed;
      break;
    }
    out.push_back(raw.substr(i, end - i + 1));
    i = end + 1;
  }
  return out;
}

ParseOutcome parse_impl(const std::string& raw, const TaskSpec& spec,
                        const std::string& request_hash,
                        const std::string& generator_model) {
  ParseOutcome outcome;
  std::size_t malformed = 0;
  const auto candidates = extract_object_candidates(raw, &malformed);
  outcome.skipped = malformed;
  for (const auto& text : candidates) {
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::exception&) {
      ++outcome.skipped;
      continue;
    }
    if (!obj.is_object() || obj.size() != spec.input_fields.size() + 1) {
      ++outcome.skipped;
      continue;
    }
    bool ok = obj.contains("label") && obj.at("label").is_string();
    std::map<std::string, std::string> fields;
    if (ok) {
      for (const auto& name : spec.input_fields) {
        if (!obj.contains(name) || !obj.at(name).is_string() ||
            obj.at(name).get<std::string>().empty()) {
          ok = false;
          break;
        }
        fields[name] = obj.at(name).get<std::string>();
      }
    }
    if (ok) {
      const std::string label = obj.at("label").get<std::string>();
      if (spec.kind == TaskKind::classification) {
        ok = spec.label_index(label) >= 0;
      } else {
        ok = !is_blank(label);
      }
      if (ok) {
        RecordMeta meta;
        if (!request_hash.empty()) meta.prompt_hash = request_hash;
        if (!generator_model.empty()) meta.generator_model = generator_model;
        outcome.records.push_back(
            make_record(spec, std::move(fields), label, Provenance::synthetic_raw, meta));
        continue;
      }
    }
    ++outcome.skipped;
  }
  return outcome;
}

// k lowest-ranked exemplars for one request, in rank order.
std::vector<Record> pick_exemplars(const Dataset& exemplars, std::size_t k,
                                   std::uint64_t request_seed) {
  std::vector<std::pair<std::uint64_t, std::size_t>> ranked;
  ranked.reserve(exemplars.size());
  const auto& records = exemplars.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    ranked.emplace_back(keyed_hash64(request_seed, records[i].id), i);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<Record> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k && i < ranked.size(); ++i) {
    out.push_back(records[ranked[i].second]);
  }
  return out;
}

[[noreturn]] void rethrow_with_index(const Error& e, std::uint64_t index) {
  throw Error(e.kind(), "request " + std::to_string(index) + ": " + e.what());
}

}  // namespace

ParseOutcome parse_generation(const std::string& raw, const TaskSpec& spec,
                              const std::string& request_hash,
                              const std::string& generator_model) {
  ParseOutcome outcome = parse_impl(raw, spec, request_hash, generator_model);
  if (outcome.records.empty()) {
    throw Error("NoParseableOutput", "no task-shaped JSON objects in completion (skipped " +
                                         std::to_string(outcome.skipped) + " candidates)");
  }
  return outcome;
}

ParseOutcome parse_generation_lenient(const std::string& raw, const TaskSpec& spec,
                                      const std::string& request_hash,
                                      const std::string& generator_model) {
  return parse_impl(raw, spec, request_hash, generator_model);
}

Dataset generate_synthetic(const TaskSpec& spec, const Dataset& exemplars,
                           std::size_t target_count, const PromptTemplate& tpl,
                           const BackendConfig& config, CountingSession& session,
                           const GenerateOptions& options) {
  spec.validate();
  if (exemplars.empty()) {
    throw Error("EmptyDataset", "generation needs a non-empty exemplar set");
  }
  if (target_count < 1) {
    throw Error("InvalidTarget", "target_count must be >= 1");
  }
  const std::size_t k = std::min(options.exemplars_per_prompt, exemplars.size());

  auto request_for = [&](std::uint64_t index) {
    const std::uint64_t request_seed = mix64(options.seed ^ mix64(index));
    const std::vector<Record> chosen = pick_exemplars(exemplars, k, request_seed);
    ChatRequest req;
    req.system_text = tpl.system_text;
    req.user_text = render_prompt(tpl, spec, chosen, k);
    req.request_index = index;
    req.model_name = config.model_name;
    req.temperature = config.temperature;
    req.max_tokens = config.max_tokens;
    return req;
  };

  std::vector<Record> collected;
  std::set<std::string> seen_ids;
  auto absorb = [&](const ChatRequest& req, const std::string& completion) {
    const ParseOutcome outcome = parse_generation_lenient(
        completion, spec, prompt_hash(req), config.model_name);
    for (const auto& r : outcome.records) {
      if (collected.size() >= target_count) {
        break;
      }
      if (seen_ids.insert(r.id).second) {
        collected.push_back(r);
      }
    }
  };

  // The first request runs alone to estimate yield for the prompt budget.
  const ChatRequest first = request_for(0);
  std::string completion;
  try {
    completion = session.complete(first);
  } catch (const Error& e) {
    rethrow_with_index(e, 0);
  }
  const std::size_t first_yield =
      std::max<std::size_t>(1, parse_generation_lenient(completion, spec).records.size());
  absorb(first, completion);
  const std::uint64_t budget = 4 * ((target_count + first_yield - 1) / first_yield);

  if (collected.size() < target_count && budget > 1) {
    OrderedParallelRunner runner(config.max_concurrency, 1, budget);
    runner.run(
        [&](std::uint64_t index) {
          try {
            return session.complete(request_for(index));
          } catch (const Error& e) {
            rethrow_with_index(e, index);
          }
        },
        [&](std::uint64_t index, std::string&& text) {
          absorb(request_for(index), text);
          return collected.size() < target_count;
        });
  }

  if (collected.size() < target_count) {
    throw BudgetExhausted(collected.size(), target_count,
                          "collected " + std::to_string(collected.size()) + " of " +
                              std::to_string(target_count) + " unique records within " +
                              std::to_string(budget) + " prompts");
  }
  return Dataset::make(spec, std::move(collected));
}

Dataset summarize_documents(const Dataset& dataset, const PromptTemplate& tpl,
                            const BackendConfig& config, CountingSession& session,
                            const SummarizeOptions& options) {
  if (dataset.task().input_fields.size() != 1) {
    throw Error("SingleFieldRequired",
                "summarization requires a task with exactly one input field");
  }
  const std::string& field = dataset.task().input_fields[0];

  auto request_for = [&](std::uint64_t index) {
    const Record& r = dataset.records()[index];
    std::map<std::string, std::string> extra;
    extra["document"] = r.fields.at(field);
    extra[field] = r.fields.at(field);
    ChatRequest req;
    req.system_text = tpl.system_text;
    req.user_text = render_prompt(tpl, dataset.task(), {}, 0, extra);
    req.request_index = index;
    req.model_name = config.model_name;
    req.temperature = options.temperature;
    req.max_tokens = config.max_tokens;
    return req;
  };

  std::vector<Record> out;
  out.reserve(dataset.size());
  OrderedParallelRunner runner(config.max_concurrency, 0, dataset.size());
  runner.run(
      [&](std::uint64_t index) {
        try {
          return session.complete(request_for(index));
        } catch (const Error& e) {
          rethrow_with_index(e, index);
        }
      },
      [&](std::uint64_t index, std::string&& text) {
        const Record& src = dataset.records()[index];
        const std::string summary = trim(text);
        if (summary.empty()) {
          throw Error("EmptySummary", "backend returned a blank summary for record " + src.id);
        }
        RecordMeta meta;
        meta.parent_id = src.id;
        meta.prompt_hash = prompt_hash(request_for(index));
        meta.generator_model = config.model_name;
        const Provenance prov = (src.provenance == Provenance::gold ||
                                 src.provenance == Provenance::summary_gold)
                                    ? Provenance::summary_gold
                                    : Provenance::summary_synthetic;
        out.push_back(make_record(dataset.task(), {{field, summary}}, src.label, prov, meta));
        return true;
      });
  return Dataset::make(dataset.task(), std::move(out));
}

}  // namespace synthline
