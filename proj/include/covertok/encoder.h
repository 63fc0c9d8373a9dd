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

#ifndef COVERTOK_ENCODER_H_
#define COVERTOK_ENCODER_H_

// Encoding and decoding with a trained vocabulary.
//
// Greedy mode covers a word the way the trainer built the vocabulary: all
// occurrences of selected tokens are applied in (rank, position) order
// whenever their outer pairs are still free. A later, longer token may
// therefore replace earlier covers nested strictly inside it. Optimal mode
// emits the minimum-token segmentation instead.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/symbols.h"
#include "covertok/vocabulary.h"

namespace covertok {

enum class EncodeMode { kGreedy, kOptimal };

struct EncodeStats {
  uint64_t label_writes = 0;
  uint64_t overrides = 0;  // Writes that replaced a nonzero label.
};

// Cover labels for `word` under greedy mode.
std::vector<Rank> CoverWord(SymbolView word, const Vocabulary& vocab,
                            EncodeStats* stats = nullptr);

std::vector<TokenId> EncodeWord(SymbolView word, const Vocabulary& vocab,
                                EncodeMode mode = EncodeMode::kGreedy,
                                EncodeStats* stats = nullptr);

// Splits like Ingest and encodes each word in stream order.
std::vector<TokenId> EncodeText(std::string_view text, const Vocabulary& vocab,
                                EncodeMode mode = EncodeMode::kGreedy);

// Concatenates token symbols; the marker renders as one space except as the
// very first symbol of the stream. Fails with "invalid token id".
absl::StatusOr<std::string> Decode(std::span<const TokenId> ids,
                                   const Vocabulary& vocab);

enum class IdFormat { kDecimal, kBinary };

// Decimal: one id per line. Binary: uint32 count followed by that many
// uint32 ids, all little-endian.
std::string SerializeIds(std::span<const TokenId> ids, IdFormat format);
absl::StatusOr<std::vector<TokenId>> ParseIds(std::string_view data,
                                              IdFormat format);

}  // namespace covertok

#endif  // COVERTOK_ENCODER_H_
