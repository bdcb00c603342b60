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

#include "aeda/augment.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "aeda/error.h"
#include "aeda/parallel.h"

namespace aeda {

void AedaParams::Validate() const {
  if (ratio.den <= 0 || ratio.num <= 0 || Ratio{1, 1} < ratio) {
    throw Error("insertion ratio must lie in (0, 1], got " + ratio.ToString());
  }
  if (punctuation.empty()) throw Error("punctuation alphabet is empty");
  std::set<std::string> seen;
  for (const auto& mark : punctuation) {
    if (mark.empty() || ContainsWhitespace(mark)) {
      throw Error("punctuation mark '" + mark + "' is empty or contains whitespace");
    }
    if (!seen.insert(mark).second) {
      throw Error("punctuation mark '" + mark + "' listed twice");
    }
  }
}

size_t MaxInsertions(size_t len, Ratio ratio) {
  const int64_t upper = ratio.FloorTimes(static_cast<int64_t>(len));
  return static_cast<size_t>(std::max<int64_t>(1, upper));
}

size_t DrawInsertionCount(size_t len, Ratio ratio, RngStream& rng) {
  if (len == 0) throw std::invalid_argument("DrawInsertionCount: len must be >= 1");
  return 1 + static_cast<size_t>(rng.UniformBelow(MaxInsertions(len, ratio)));
}

AedaTrace AedaAugmentTraced(const TokenSeq& tokens, const AedaParams& params,
                            RngStream& rng) {
  const size_t len = tokens.size();
  if (len == 0) throw std::invalid_argument("AedaAugment: empty token sequence");
  const size_t n = DrawInsertionCount(len, params.ratio, rng);

  std::vector<size_t> order(len);
  std::iota(order.begin(), order.end(), size_t{0});
  for (size_t k = 0; k < n; ++k) {
    const size_t j = k + static_cast<size_t>(rng.UniformBelow(len - k));
    std::swap(order[k], order[j]);
  }

  AedaTrace trace;
  trace.slots.assign(order.begin(), order.begin() + static_cast<ptrdiff_t>(n));
  std::vector<const std::string*> mark_at(len, nullptr);
  trace.marks.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    const auto& mark = params.punctuation[rng.UniformBelow(params.punctuation.size())];
    trace.marks.push_back(mark);
    mark_at[trace.slots[k]] = &mark;
  }

  trace.output.reserve(len + n);
  trace.output_positions.reserve(n);
  for (size_t i = 0; i < len; ++i) {
    if (mark_at[i] != nullptr) {
      trace.output_positions.push_back(trace.output.size());
      trace.output.push_back(*mark_at[i]);
    }
    trace.output.push_back(tokens[i]);
  }
  return trace;
}

TokenSeq AedaAugment(const TokenSeq& tokens, const AedaParams& params,
                     RngStream& rng) {
  return AedaAugmentTraced(tokens, params, rng).output;
}

Corpus AedaBatch(const Corpus& corpus, size_t num_aug, const AedaParams& params,
                 uint64_t master_seed, size_t jobs) {
  params.Validate();
  const size_t block = 1 + num_aug;
  Corpus out(corpus.size() * block);
  ParallelFor(corpus.size(), jobs, [&](size_t i) {
    const LabeledExample& ex = corpus[i];
    out[i * block] = ex;
    if (num_aug == 0) return;
    const TokenSeq tokens = Tokenize(ex.text);
    if (tokens.empty()) {
      throw Error("example " + std::to_string(i + 1) + " has no tokens to augment");
    }
    for (size_t j = 0; j < num_aug; ++j) {
      RngStream rng = RngStream::Derive(master_seed, {i, j});
      out[i * block + 1 + j] = {ex.label, Detokenize(AedaAugment(tokens, params, rng))};
    }
  });
  return out;
}

}  // namespace aeda
