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

#ifndef AEDA_AUGMENT_H_
#define AEDA_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "aeda/corpus.h"
#include "aeda/ratio.h"
#include "aeda/rng.h"
#include "aeda/text.h"

namespace aeda {

// Punctuation-insertion augmentation.
//
// For a sentence of L tokens:
//   1. n is drawn uniformly from {1, ..., max(1, floor(ratio * L))};
//   2. n distinct slots are drawn without replacement from {0, ..., L-1}
//      (partial Fisher-Yates);
//   3. each chosen slot, in draw order, gets a mark drawn uniformly from
//      the punctuation alphabet, inserted immediately before the token at
//      that slot.
// The original tokens therefore survive in order, shifted right.

struct AedaParams {
  Ratio ratio{1, 3};
  std::vector<std::string> punctuation{".", ";", "?", ":", "!", ","};

  // Throws aeda::Error unless 0 < ratio <= 1 and the alphabet is non-empty,
  // distinct and free of whitespace.
  void Validate() const;
};

// Upper end of the insertion-count range: max(1, floor(ratio * len)).
size_t MaxInsertions(size_t len, Ratio ratio);

// Uniform draw from {1, ..., MaxInsertions(len, ratio)}. len must be >= 1.
size_t DrawInsertionCount(size_t len, Ratio ratio, RngStream& rng);

// Where each mark landed. `output_positions` index into the augmented
// sequence and are increasing; `slots` are the original token indices in
// draw order, with `marks` parallel to `slots`.
struct AedaTrace {
  TokenSeq output;
  std::vector<size_t> slots;
  std::vector<std::string> marks;
  std::vector<size_t> output_positions;
};

// Throws std::invalid_argument on an empty sequence.
AedaTrace AedaAugmentTraced(const TokenSeq& tokens, const AedaParams& params,
                            RngStream& rng);
TokenSeq AedaAugment(const TokenSeq& tokens, const AedaParams& params,
                     RngStream& rng);

// Each example i is emitted followed by num_aug augmented copies; copy j
// uses RngStream::Derive(master_seed, {i, j}). Output does not depend on
// `jobs`. Throws aeda::Error if an example has no tokens.
Corpus AedaBatch(const Corpus& corpus, size_t num_aug, const AedaParams& params,
                 uint64_t master_seed, size_t jobs = 1);

}  // namespace aeda

#endif  // AEDA_AUGMENT_H_
