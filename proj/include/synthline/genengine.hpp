#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synthline/backend.hpp"
#include "synthline/dataset.hpp"
#include "synthline/prompt.hpp"

namespace synthline {

struct ParseOutcome {
  std::vector<Record> records;
  std::size_t skipped = 0;
};

// Extracts every well-formed JSON object in `raw` whose keys are exactly the
// task's input fields plus "label" with non-empty string values and (for
// classification) an in-space label. Anything else is skipped and counted,
// never silently accepted. Records get provenance synthetic_raw and ids from
// stable_id. Throws Error("NoParseableOutput") when nothing parses.
ParseOutcome parse_generation(const std::string& raw, const TaskSpec& spec,
                              const std::string& request_hash = "",
                              const std::string& generator_model = "");

// As parse_generation but never throws on zero yield (engine-internal).
ParseOutcome parse_generation_lenient(const std::string& raw, const TaskSpec& spec,
                                      const std::string& request_hash = "",
                                      const std::string& generator_model = "");

struct GenerateOptions {
  std::size_t exemplars_per_prompt = 5;  // k
  std::uint64_t seed = 42;
};

// Few-shot synthetic data generation: repeatedly samples k exemplars
// (seeded, without replacement within a prompt), renders, completes, and
// parses, accumulating unique records (dedup by id) until target_count is
// reached. Completions are consumed strictly in request-index order, so
// output does not depend on how many requests are in flight. The prompt
// budget is 4 * ceil(target / yield) with yield estimated from the first
// completion; exceeding it raises BudgetExhausted(collected, target).
Dataset generate_synthetic(const TaskSpec& spec, const Dataset& exemplars,
                           std::size_t target_count, const PromptTemplate& tpl,
                           const BackendConfig& config, CountingSession& session,
                           const GenerateOptions& options);

struct SummarizeOptions {
  double temperature = 0.0;
};

// One summary record per input record: the single input field is replaced by
// the completion, the label is preserved, provenance maps to summary_gold or
// summary_synthetic, and meta.parent_id points at the source record.
Dataset summarize_documents(const Dataset& dataset, const PromptTemplate& tpl,
                            const BackendConfig& config, CountingSession& session,
                            const SummarizeOptions& options = {});

}  // namespace synthline
