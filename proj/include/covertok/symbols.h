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

#ifndef COVERTOK_SYMBOLS_H_
#define COVERTOK_SYMBOLS_H_

// Symbol strings. Words and tokens are sequences over a 257-symbol alphabet:
// the 256 byte values plus a reserved word-start marker. Algorithms that do
// not care about the byte interpretation (cover, partition, the hardness
// reduction) accept any symbol value.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace covertok {

using Symbol = char16_t;
using SymbolString = std::u16string;
using SymbolView = std::u16string_view;

inline constexpr Symbol kMarker = 256;
inline constexpr int kAlphabetSize = 257;

// Hex fields write the marker as this character; it is not a hex digit.
inline constexpr char kHexMarker = '_';

// Transparent hash so maps keyed by SymbolString accept SymbolView lookups.
struct SymbolHash {
  using is_transparent = void;
  size_t operator()(SymbolView s) const noexcept {
    return std::hash<SymbolView>{}(s);
  }
};

SymbolString FromBytes(std::string_view bytes);

// Bytes of `s` with the marker rendered as `marker_text`.
std::string ToBytes(SymbolView s, std::string_view marker_text = " ");

// Lowercase hex of the bytes, with a leading '_' for the marker.
std::string ToHex(SymbolView s);
absl::StatusOr<SymbolString> FromHex(std::string_view hex);

// Human-readable rendering for logs and test failure messages.
std::string ToDisplay(SymbolView s);

// Splits on '\n'. A trailing newline does not produce an empty last line.
std::vector<std::string_view> SplitLines(std::string_view text);

inline bool IsAsciiSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace covertok

#endif  // COVERTOK_SYMBOLS_H_
