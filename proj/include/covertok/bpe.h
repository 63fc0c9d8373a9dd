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

#ifndef COVERTOK_BPE_H_
#define COVERTOK_BPE_H_

// Byte-pair encoding baseline: frequency-greedy pairwise merges.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/corpus.h"
#include "covertok/symbols.h"

namespace covertok {

struct Merge {
  SymbolString left;
  SymbolString right;

  SymbolString merged() const { return left + right; }
  friend bool operator==(const Merge&, const Merge&) = default;
};

using MergeList = std::vector<Merge>;

// Repeatedly merges the adjacent symbol pair with the highest count-weighted
// frequency. Ties go to the lexicographically smaller merged string, then the
// shorter left side. Stops early when no word has two symbols left.
absl::StatusOr<MergeList> BpeTrain(std::span<const CountedWord> words,
                                   size_t k);

// Distinct merged strings in merge order.
std::vector<SymbolString> MergedTokens(const MergeList& merges);

class BpeEncoder {
 public:
  explicit BpeEncoder(const MergeList& merges);

  // Applies merges in list order to the singleton sequence of `word`.
  std::vector<SymbolString> Encode(SymbolView word) const;

 private:
  // left + kPairSeparator + right -> position in the merge list.
  std::unordered_map<SymbolString, size_t> priority_;
};

// Merge file: `<left-hex> <right-hex>` per line, in merge order.
std::string SerializeMerges(const MergeList& merges);
absl::StatusOr<MergeList> ParseMerges(std::string_view text);

}  // namespace covertok

#endif  // COVERTOK_BPE_H_
