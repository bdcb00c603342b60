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

#ifndef AEDA_RNG_H_
#define AEDA_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

namespace aeda {

// SplitMix64 output finalizer. Bijective on 64-bit words.
constexpr uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic random stream backed by SplitMix64.
//
// Every draw is defined purely in terms of 64-bit integer arithmetic, so a
// given seed yields the same sequence on every platform and compiler. The
// standard library distributions are deliberately avoided for that reason.
//
// Streams for independent jobs are obtained with Derive(), which folds a key
// path into the master seed:
//
//   h = Mix64(master)
//   for k in path: h = Mix64(h ^ Mix64(k + 0x9E3779B97F4A7C15))
//   stream seed = h
//
// tools/reference_aeda.py reimplements this scheme independently and is used
// to regenerate the golden files under tests/golden/.
class RngStream {
 public:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit RngStream(uint64_t seed) : state_(seed) {}

  static uint64_t DeriveSeed(uint64_t master,
                             std::initializer_list<uint64_t> path);
  static RngStream Derive(uint64_t master,
                          std::initializer_list<uint64_t> path) {
    return RngStream(DeriveSeed(master, path));
  }

  uint64_t Next() {
    state_ += kGamma;
    return Mix64(state_);
  }

  // Uniform integer in [0, bound). Unbiased: rejects draws below
  // 2^64 mod bound. bound must be positive.
  uint64_t UniformBelow(uint64_t bound);

  // Uniform integer in [lo, hi], inclusive.
  uint64_t UniformInclusive(uint64_t lo, uint64_t hi);

  // Uniform double in [0, 1) built from the top 53 bits of one draw.
  double UniformUnit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Fisher-Yates, drawing j = i + UniformBelow(n - i) for i = 0 .. n-2.
  template <typename T>
  void Shuffle(std::span<T> items) {
    const size_t n = items.size();
    for (size_t i = 0; i + 1 < n; ++i) {
      const size_t j = i + static_cast<size_t>(UniformBelow(n - i));
      std::swap(items[i], items[j]);
    }
  }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

// Domain tags used as the first Derive() key so that streams for different
// purposes never collide even when they share a master seed.
enum class StreamDomain : uint64_t {
  kAugmentAeda = 1,
  kAugmentEda = 2,
  kSplit = 3,
  kSubsample = 4,
};

}  // namespace aeda

#endif  // AEDA_RNG_H_
