#include "synthline/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "synthline/errors.hpp"
#include "synthline/hash.hpp"

namespace synthline {

namespace {

// Select the n lowest-ranked ids among `candidates` (indices into records).
std::set<std::size_t> lowest_ranked(const std::vector<Record>& records,
                                    const std::vector<std::size_t>& candidates,
                                    std::size_t n, std::uint64_t seed) {
  std::vector<std::pair<std::uint64_t, std::size_t>> ranked;
  ranked.reserve(candidates.size());
  for (std::size_t idx : candidates) {
    ranked.emplace_back(keyed_hash64(seed, records[idx].id), idx);
  }
  std::sort(ranked.begin(), ranked.end(),
            [&](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return records[a.second].id < records[b.second].id;
            });
  std::set<std::size_t> chosen;
  for (std::size_t i = 0; i < n && i < ranked.size(); ++i) {
    chosen.insert(ranked[i].second);
  }
  return chosen;
}

}  // namespace

void SamplePolicy::validate() const {
  if (fraction.has_value() == count.has_value()) {
    throw ValidationError("SamplePolicyError", "amount",
                          "policy needs exactly one of fraction or count");
  }
  if (fraction && !(*fraction > 0.0 && *fraction <= 1.0)) {
    throw ValidationError("SamplePolicyError", "fraction", "fraction must be in (0,1]");
  }
  if (count && *count < 1) {
    throw ValidationError("SamplePolicyError", "count", "count must be >= 1");
  }
}

Dataset sample_exemplars(const Dataset& dataset, const SamplePolicy& policy) {
  policy.validate();
  if (dataset.empty()) {
    throw Error("EmptyDataset", "cannot sample from an empty dataset");
  }
  const auto& records = dataset.records();
  const std::size_t total = records.size();
  std::size_t n;
  if (policy.fraction) {
    n = static_cast<std::size_t>(std::floor(*policy.fraction * static_cast<double>(total)));
  } else {
    n = *policy.count;
    if (n > total) {
      throw Error("CountTooLarge", "requested " + std::to_string(n) + " of " +
                                       std::to_string(total) + " records");
    }
  }

  std::set<std::size_t> chosen;
  if (!policy.stratified) {
    std::vector<std::size_t> all(total);
    for (std::size_t i = 0; i < total; ++i) all[i] = i;
    chosen = lowest_ranked(records, all, n, policy.seed);
  } else {
    if (dataset.task().kind != TaskKind::classification) {
      throw Error("StratifyOnGenerationTask",
                  "stratified sampling requires a classification task");
    }
    const auto& labels = dataset.task().label_space;
    std::vector<std::vector<std::size_t>> by_class(labels.size());
    for (std::size_t i = 0; i < total; ++i) {
      int c = dataset.task().label_index(records[i].label);
      by_class[static_cast<std::size_t>(c)].push_back(i);
    }
    const double q = static_cast<double>(n) / static_cast<double>(total);
    std::vector<std::size_t> take(labels.size());
    std::vector<std::pair<double, std::size_t>> remainders;  // (-frac, class)
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < labels.size(); ++c) {
      const double quota = q * static_cast<double>(by_class[c].size());
      take[c] = static_cast<std::size_t>(std::floor(quota));
      assigned += take[c];
      remainders.emplace_back(-(quota - std::floor(quota)), c);
    }
    // Largest fractional parts get the leftover seats, ties by label order.
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t leftover = n - assigned;
    for (std::size_t pass = 0; leftover > 0; pass = (pass + 1) % remainders.size()) {
      std::size_t c = remainders[pass].second;
      if (take[c] < by_class[c].size()) {
        ++take[c];
        --leftover;
      } else if (pass + 1 == remainders.size()) {
        bool room = false;
        for (std::size_t k = 0; k < labels.size(); ++k) {
          if (take[k] < by_class[k].size()) room = true;
        }
        if (!room) break;
      }
    }
    for (std::size_t c = 0; c < labels.size(); ++c) {
      auto part = lowest_ranked(records, by_class[c], take[c], policy.seed);
      chosen.insert(part.begin(), part.end());
    }
  }

  std::vector<Record> out;
  out.reserve(chosen.size());
  for (std::size_t i = 0; i < total; ++i) {
    if (chosen.count(i)) {
      out.push_back(records[i]);
    }
  }
  return Dataset::make(dataset.task(), std::move(out));
}

}  // namespace synthline
