#pragma once

#include <cstdint>
#include <optional>

#include "synthline/dataset.hpp"

namespace synthline {

// How to pick the exemplar subset of a gold training set.
struct SamplePolicy {
  std::optional<double> fraction;     // in (0, 1]
  std::optional<std::size_t> count;   // absolute, >= 1
  bool stratified = false;            // classification only
  std::uint64_t seed = 42;

  // Exactly one of fraction/count; throws ValidationError ("SamplePolicyError").
  void validate() const;
};

// Deterministic seeded subset selection. Each record is ranked by a keyed
// hash of (seed, id) and the lowest ranks win, so the selection depends only
// on the record ids and the seed, not on input order or platform RNGs.
// Stratified mode keeps each class within one record of exact
// proportionality (largest-remainder rounding, ties by label-space order).
// Output preserves input order. Errors: EmptyDataset, CountTooLarge,
// StratifyOnGenerationTask.
Dataset sample_exemplars(const Dataset& dataset, const SamplePolicy& policy);

}  // namespace synthline
