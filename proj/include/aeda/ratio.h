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

#ifndef AEDA_RATIO_H_
#define AEDA_RATIO_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace aeda {

// Non-negative exact rational. Used wherever a fraction multiplies a count
// (insertion ratio, split and subsample fractions, EDA rates) so that
// floor/ceil/round of the product never depends on binary floating point.
struct Ratio {
  int64_t num = 0;
  int64_t den = 1;

  // Accepts "p/q", integers ("2") and plain decimals ("0.125", ".5").
  // Throws aeda::Error on malformed or negative input.
  static Ratio Parse(std::string_view text);

  Ratio Reduced() const;
  double ToDouble() const { return static_cast<double>(num) / den; }
  std::string ToString() const;

  int64_t FloorTimes(int64_t n) const;
  int64_t CeilTimes(int64_t n) const;
  // Nearest integer to num*n/den, halves rounded up.
  int64_t RoundTimes(int64_t n) const;

  bool IsZero() const { return num == 0; }
  bool operator==(const Ratio& o) const {
    return static_cast<__int128>(num) * o.den == static_cast<__int128>(o.num) * den;
  }
  bool operator<(const Ratio& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
  bool operator<=(const Ratio& o) const { return !(o < *this); }
};

}  // namespace aeda

#endif  // AEDA_RATIO_H_
