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

#include "aeda/rng.h"

#include <stdexcept>

namespace aeda {

uint64_t RngStream::DeriveSeed(uint64_t master,
                               std::initializer_list<uint64_t> path) {
  uint64_t h = Mix64(master);
  for (uint64_t key : path) h = Mix64(h ^ Mix64(key + kGamma));
  return h;
}

uint64_t RngStream::UniformBelow(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("UniformBelow: bound must be > 0");
  // (2^64 - bound) mod bound == 2^64 mod bound.
  const uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const uint64_t r = Next();
    if (r >= threshold) return r % bound;
  }
}

uint64_t RngStream::UniformInclusive(uint64_t lo, uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("UniformInclusive: empty range");
  if (lo == 0 && hi == UINT64_MAX) return Next();
  return lo + UniformBelow(hi - lo + 1);
}

}  // namespace aeda
