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

#ifndef AEDA_TEXT_H_
#define AEDA_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace aeda {

// Ordered whitespace-free tokens. Every token is non-empty and contains no
// Unicode White_Space code point; Tokenize() is the only producer that
// guarantees this, so code building a TokenSeq by hand must uphold it.
using TokenSeq = std::vector<std::string>;

// Byte length of the UTF-8 encoded White_Space code point starting at
// text[pos], or 0 if none starts there. Malformed UTF-8 is never whitespace.
size_t WhitespaceLengthAt(std::string_view text, size_t pos);

bool ContainsWhitespace(std::string_view text);

// Maximal runs of non-whitespace, in order. Consecutive separators collapse.
TokenSeq Tokenize(std::string_view text);

// Tokens joined by a single ASCII space.
std::string Detokenize(const TokenSeq& tokens);

// Number of tokens Tokenize(text) would produce, without allocating them.
size_t CountTokens(std::string_view text);

// ASCII-only lowercasing; bytes >= 0x80 pass through untouched.
std::string AsciiLower(std::string_view text);

// Strips leading and trailing whitespace (same class as Tokenize).
std::string_view Trim(std::string_view text);

}  // namespace aeda

#endif  // AEDA_TEXT_H_
