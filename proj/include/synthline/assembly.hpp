#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "synthline/dataset.hpp"

namespace synthline {

// Normalized content key for duplicate and leakage checks: NFC, lowercased,
// whitespace-collapsed input fields joined in input_fields order. Labels are
// not part of the key.
std::string content_key(const Record& record, const TaskSpec& spec);

// Keeps the first occurrence per content key, order otherwise preserved.
std::pair<Dataset, std::size_t> dedup(const Dataset& dataset);

struct LeakageMatch {
  std::string synthetic_id;
  std::string matched_id;
  double similarity = 0.0;  // 1.0 for exact matches
  bool exact = false;
};

struct LeakageReport {
  std::size_t screened = 0;
  std::size_t removed_exact = 0;
  std::size_t removed_near = 0;
  std::vector<LeakageMatch> matches;  // one entry per removed record

  std::string to_json() const;
};

// Removes synthetic records whose normalized content exactly matches any
// protected record or whose token n-gram Jaccard similarity with one reaches
// the threshold. Deterministic: protected sets are scanned in order and the
// first-best match is reported.
std::pair<Dataset, LeakageReport> leakage_filter(const Dataset& synthetic,
                                                 const std::vector<Dataset>& protected_sets,
                                                 std::size_t ngram = 8,
                                                 double jaccard_threshold = 0.5);

enum class MixMode { replace, augment };

std::string to_string(MixMode mode);
MixMode mix_mode_from_string(const std::string& s);

// replace -> the synthetic records only; augment -> gold followed by
// synthetic with content dedup across the boundary (gold wins collisions).
// Provenance is preserved per record. Errors: TaskMismatch.
Dataset mix(const Dataset& gold, const Dataset& synthetic, MixMode mode);

}  // namespace synthline
