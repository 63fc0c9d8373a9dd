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

#include "covertok/symbols.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace covertok {

SymbolString FromBytes(std::string_view bytes) {
  SymbolString out;
  out.reserve(bytes.size());
  for (unsigned char c : bytes) out.push_back(static_cast<Symbol>(c));
  return out;
}

std::string ToBytes(SymbolView s, std::string_view marker_text) {
  std::string out;
  out.reserve(s.size());
  for (Symbol c : s) {
    if (c == kMarker) {
      out.append(marker_text);
    } else {
      out.push_back(static_cast<char>(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

std::string ToHex(SymbolView s) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * s.size());
  for (Symbol c : s) {
    if (c == kMarker) {
      out.push_back(kHexMarker);
      continue;
    }
    out.push_back(kDigits[(c >> 4) & 0xf]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

absl::StatusOr<SymbolString> FromHex(std::string_view hex) {
  SymbolString out;
  if (!hex.empty() && hex.front() == kHexMarker) {
    out.push_back(kMarker);
    hex.remove_prefix(1);
  }
  if (hex.size() % 2 != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("odd-length hex field: '", std::string(hex), "'"));
  }
  for (size_t i = 0; i < hex.size(); i += 2) {
    const int hi = HexValue(hex[i]);
    const int lo = HexValue(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("invalid lowercase hex: '", std::string(hex), "'"));
    }
    out.push_back(static_cast<Symbol>(hi * 16 + lo));
  }
  return out;
}

std::string ToDisplay(SymbolView s) {
  std::string out;
  for (Symbol c : s) {
    if (c == kMarker) {
      out += "\xe2\x96\x81";  // U+2581 LOWER ONE EIGHTH BLOCK
    } else if (c > 0xff) {
      absl::StrAppend(&out, "<", static_cast<int>(c), ">");
    } else if (c >= 0x21 && c < 0x7f && c != '\\') {
      out.push_back(static_cast<char>(c));
    } else {
      absl::StrAppendFormat(&out, "\\x%02x", static_cast<int>(c));
    }
  }
  return out;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    lines.push_back(text.substr(0, eol));
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return lines;
}

}  // namespace covertok
