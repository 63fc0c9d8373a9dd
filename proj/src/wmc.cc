// Copyright 2026 The CoverTok Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covertok/wmc.h"

#include <algorithm>
#include <queue>

#include "absl/status/status.h"
#include "covertok/trainer.h"

namespace covertok {

absl::StatusOr<WmcInstance> WmcInstance::FromSets(
    std::vector<uint64_t> weights, std::vector<std::vector<uint32_t>> sets) {
  WmcInstance instance;
  instance.weights_ = std::move(weights);
  instance.offsets_.push_back(0);
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.back() >= instance.weights_.size()) {
      return absl::InvalidArgumentError("set element out of range");
    }
    instance.elements_.insert(instance.elements_.end(), s.begin(), s.end());
    instance.offsets_.push_back(instance.elements_.size());
  }
  return instance;
}

uint64_t WmcInstance::total_weight() const {
  uint64_t total = 0;
  for (uint64_t w : weights_) total += w;
  return total;
}

WmcInstance BuildWmc(std::span<const CountedWord> words,
                     const CandidateSet& candidates) {
  WmcInstance instance;
  std::vector<uint32_t> base(words.size());
  for (size_t w = 0; w < words.size(); ++w) {
    base[w] = static_cast<uint32_t>(instance.weights_.size());
    instance.weights_.insert(instance.weights_.end(), words[w].word.size() - 1,
                             words[w].count);
  }
  const OccurrenceIndex index = OccurrenceIndex::Build(words, candidates);
  instance.offsets_.push_back(0);
  for (size_t c = 0; c < candidates.size(); ++c) {
    const size_t length = candidates.token(c).size();
    const size_t begin = instance.elements_.size();
    for (const Occurrence& occ : index.occurrences(c)) {
      for (size_t j = occ.start; j + 1 < occ.start + length; ++j) {
        const uint32_t e = base[occ.word] + static_cast<uint32_t>(j);
        // Occurrences are sorted, so repeats can only follow each other.
        if (instance.elements_.size() > begin && instance.elements_.back() >= e) {
          continue;
        }
        instance.elements_.push_back(e);
      }
    }
    instance.offsets_.push_back(instance.elements_.size());
  }
  return instance;
}

absl::StatusOr<WmcResult> GreedWmc(const WmcInstance& instance, size_t k) {
  if (k == 0) return absl::InvalidArgumentError("invalid budget: k must be >= 1");
  std::vector<bool> covered(instance.num_elements(), false);
  auto gain_of = [&](size_t s) {
    uint64_t g = 0;
    for (uint32_t e : instance.set(s)) {
      if (!covered[e]) g += instance.weight(e);
    }
    return g;
  };

  struct Entry {
    uint64_t gain;
    size_t set;
    size_t epoch;
  };
  auto less = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.set > b.set;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(less)> queue(less);
  for (size_t s = 0; s < instance.num_sets(); ++s) queue.push({gain_of(s), s, 0});

  WmcResult result;
  while (result.chosen.size() < k && !queue.empty()) {
    Entry top = queue.top();
    queue.pop();
    if (top.epoch != result.chosen.size()) {
      top.gain = gain_of(top.set);
      top.epoch = result.chosen.size();
      queue.push(top);
      continue;
    }
    if (top.gain == 0) break;
    for (uint32_t e : instance.set(top.set)) covered[e] = true;
    result.objective += top.gain;
    result.chosen.push_back(top.set);
    result.cumulative.push_back(result.objective);
  }
  return result;
}

}  // namespace covertok
