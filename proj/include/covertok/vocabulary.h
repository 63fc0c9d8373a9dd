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

#ifndef COVERTOK_VOCABULARY_H_
#define COVERTOK_VOCABULARY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/symbols.h"

namespace covertok {

// Insertion rank of a selected token. Rank 0 is reserved for "uncovered" in
// cover labels; selected tokens are ranked 1..k.
using Rank = uint32_t;

// Token ids: 0-255 are bytes, 256 is the marker and 256 + r is the selected
// token of rank r.
using TokenId = uint32_t;
inline constexpr TokenId kMarkerId = 256;

// Singletons (all 257 base symbols) are implicit; `selected()` holds the
// ordered multi-symbol tokens S. Immutable once built, so safe to share
// across threads.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Fails if a token is shorter than 2 symbols or listed twice.
  static absl::StatusOr<Vocabulary> FromTokens(
      std::vector<SymbolString> selected);

  size_t size() const { return selected_.size(); }
  bool empty() const { return selected_.empty(); }
  std::span<const SymbolString> selected() const { return selected_; }
  const SymbolString& token(Rank rank) const { return selected_[rank - 1]; }
  std::optional<Rank> RankOf(SymbolView token) const;
  bool Contains(SymbolView token) const { return RankOf(token).has_value(); }
  // Length of the longest selected token, at least 1.
  size_t max_token_length() const { return max_token_length_; }

  static TokenId IdOfRank(Rank rank) { return kMarkerId + rank; }
  static TokenId IdOfSymbol(Symbol s) { return static_cast<TokenId>(s); }
  size_t id_count() const { return kAlphabetSize + selected_.size(); }
  absl::StatusOr<SymbolView> Symbols(TokenId id) const;

 private:
  std::vector<SymbolString> selected_;
  std::unordered_map<SymbolString, Rank, SymbolHash, std::equal_to<>> ranks_;
  size_t max_token_length_ = 1;
};

// File format:
//   GREEDTOK-VOCAB v1
//   k=<decimal>
//   <hex of rank-1 token>
//   ...
std::string SerializeVocabulary(const Vocabulary& vocab);
absl::StatusOr<Vocabulary> ParseVocabulary(std::string_view text);

}  // namespace covertok

#endif  // COVERTOK_VOCABULARY_H_
