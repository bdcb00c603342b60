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

#include "aeda/ratio.h"

#include <charconv>
#include <numeric>

#include "aeda/error.h"
#include "aeda/text.h"

namespace aeda {

namespace {

int64_t ParseDigits(std::string_view digits, std::string_view whole) {
  int64_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error("invalid rational '" + std::string(whole) + "'");
  }
  return value;
}

bool AllDigits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Ratio Ratio::Parse(std::string_view text) {
  const std::string_view t = Trim(text);
  const auto bad = [&] { return Error("invalid rational '" + std::string(t) + "'"); };
  if (t.empty()) throw bad();
  if (const size_t slash = t.find('/'); slash != std::string_view::npos) {
    const std::string_view p = t.substr(0, slash);
    const std::string_view q = t.substr(slash + 1);
    if (p.empty() || q.empty() || !AllDigits(p) || !AllDigits(q)) throw bad();
    Ratio r{ParseDigits(p, t), ParseDigits(q, t)};
    if (r.den == 0) throw Error("rational '" + std::string(t) + "' has zero denominator");
    return r.Reduced();
  }
  const size_t dot = t.find('.');
  const std::string_view int_part = t.substr(0, dot);
  const std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view() : t.substr(dot + 1);
  if (!AllDigits(int_part) || !AllDigits(frac_part)) throw bad();
  if (int_part.empty() && frac_part.empty()) throw bad();
  if (frac_part.size() > 15) throw bad();
  int64_t den = 1;
  for (size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const int64_t whole = int_part.empty() ? 0 : ParseDigits(int_part, t);
  const int64_t frac = frac_part.empty() ? 0 : ParseDigits(frac_part, t);
  if (whole > (INT64_MAX - frac) / den) throw bad();
  return Ratio{whole * den + frac, den}.Reduced();
}

Ratio Ratio::Reduced() const {
  const int64_t g = std::gcd(num, den);
  return g == 0 ? *this : Ratio{num / g, den / g};
}

std::string Ratio::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

int64_t Ratio::FloorTimes(int64_t n) const {
  return static_cast<int64_t>((static_cast<__int128>(num) * n) / den);
}

int64_t Ratio::CeilTimes(int64_t n) const {
  const __int128 p = static_cast<__int128>(num) * n;
  return static_cast<int64_t>((p + den - 1) / den);
}

int64_t Ratio::RoundTimes(int64_t n) const {
  const __int128 p = static_cast<__int128>(num) * n;
  return static_cast<int64_t>((2 * p + den) / (2 * static_cast<__int128>(den)));
}

}  // namespace aeda
