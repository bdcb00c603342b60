//
// Copyright 2026 The AEDA Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "aeda/text.h"

#include <cstdint>

namespace aeda {

namespace {

bool IsWhiteSpaceCodePoint(uint32_t cp) {
  switch (cp) {
    case 0x0009: case 0x000A: case 0x000B: case 0x000C: case 0x000D:
    case 0x0020: case 0x0085: case 0x00A0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

template <typename Fn>
void ForEachToken(std::string_view text, Fn&& fn) {
  size_t pos = 0;
  size_t start = std::string_view::npos;
  while (pos < text.size()) {
    const size_t ws = WhitespaceLengthAt(text, pos);
    if (ws > 0) {
      if (start != std::string_view::npos) {
        fn(text.substr(start, pos - start));
        start = std::string_view::npos;
      }
      pos += ws;
    } else {
      if (start == std::string_view::npos) start = pos;
      ++pos;
    }
  }
  if (start != std::string_view::npos) fn(text.substr(start));
}

}  // namespace

size_t WhitespaceLengthAt(std::string_view text, size_t pos) {
  const auto byte = [&](size_t i) {
    return static_cast<uint8_t>(text[pos + i]);
  };
  const size_t left = text.size() - pos;
  const uint8_t b0 = byte(0);
  if (b0 < 0x80) return IsWhiteSpaceCodePoint(b0) ? 1 : 0;
  // Only 2- and 3-byte sequences can encode White_Space code points.
  if ((b0 & 0xE0) == 0xC0 && left >= 2 && (byte(1) & 0xC0) == 0x80) {
    const uint32_t cp = ((b0 & 0x1Fu) << 6) | (byte(1) & 0x3Fu);
    return cp >= 0x80 && IsWhiteSpaceCodePoint(cp) ? 2 : 0;
  }
  if ((b0 & 0xF0) == 0xE0 && left >= 3 && (byte(1) & 0xC0) == 0x80 &&
      (byte(2) & 0xC0) == 0x80) {
    const uint32_t cp =
        ((b0 & 0x0Fu) << 12) | ((byte(1) & 0x3Fu) << 6) | (byte(2) & 0x3Fu);
    return cp >= 0x800 && IsWhiteSpaceCodePoint(cp) ? 3 : 0;
  }
  return 0;
}

bool ContainsWhitespace(std::string_view text) {
  for (size_t i = 0; i < text.size(); ++i) {
    if (WhitespaceLengthAt(text, i) > 0) return true;
  }
  return false;
}

TokenSeq Tokenize(std::string_view text) {
  TokenSeq tokens;
  ForEachToken(text, [&](std::string_view tok) { tokens.emplace_back(tok); });
  return tokens;
}

std::string Detokenize(const TokenSeq& tokens) {
  std::string out;
  size_t total = tokens.empty() ? 0 : tokens.size() - 1;
  for (const auto& t : tokens) total += t.size();
  out.reserve(total);
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

size_t CountTokens(std::string_view text) {
  size_t n = 0;
  ForEachToken(text, [&](std::string_view) { ++n; });
  return n;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view Trim(std::string_view text) {
  size_t begin = 0;
  while (begin < text.size()) {
    const size_t ws = WhitespaceLengthAt(text, begin);
    if (ws == 0) break;
    begin += ws;
  }
  // Scan forward to find the end of the last non-whitespace run.
  size_t end = begin;
  size_t pos = begin;
  while (pos < text.size()) {
    const size_t ws = WhitespaceLengthAt(text, pos);
    if (ws > 0) {
      pos += ws;
    } else {
      ++pos;
      end = pos;
    }
  }
  return text.substr(begin, end - begin);
}

}  // namespace aeda
