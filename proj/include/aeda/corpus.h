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

#ifndef AEDA_CORPUS_H_
#define AEDA_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "aeda/ratio.h"

namespace aeda {

// One (label, text) pair. label is an opaque non-empty class identifier;
// text holds no tab or newline.
struct LabeledExample {
  std::string label;
  std::string text;

  bool operator==(const LabeledExample&) const = default;
};

using Corpus = std::vector<LabeledExample>;

struct CorpusStats {
  size_t n_class = 0;
  double avg_len = 0.0;
  size_t n_examples = 0;
  size_t vocab_size = 0;
};

// Throws aeda::Error if the example violates the LabeledExample invariants.
void ValidateExample(const LabeledExample& example);

// Parses `label<TAB>text` lines. Empty lines are skipped. Errors carry the
// 1-based line number (ParseError); a file with no examples is an error.
Corpus ParseTsv(std::string_view content, const std::string& source = "<memory>");
Corpus ReadTsv(const std::filesystem::path& path);

// Canonical form: one `label<TAB>text\n` per example.
std::string FormatTsv(const Corpus& corpus);
// Writes through a temporary file renamed into place on success, so a
// failed write never leaves a partial file at `path`.
void WriteTsv(const Corpus& corpus, const std::filesystem::path& path);

// Atomically replaces `path` with `content`.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view content);
std::string ReadFile(const std::filesystem::path& path);

// Uniform permutation under `seed`; the first ceil((1 - test_fraction) * N)
// examples go to train. Both sides must be non-empty.
std::pair<Corpus, Corpus> Split(const Corpus& corpus, Ratio test_fraction,
                                uint64_t seed);

// Either an absolute example count or a fraction of the corpus.
struct SampleSize {
  std::variant<size_t, Ratio> value;

  static SampleSize Count(size_t n) { return {n}; }
  static SampleSize Fraction(Ratio r) { return {r}; }
  // "500" is a count; "0.5", "1/2" and "1.0" are fractions; "full" is 1/1.
  static SampleSize Parse(std::string_view text);

  // Resolved example count for a corpus of `corpus_size`. Fractions round
  // down but never below one example.
  size_t Resolve(size_t corpus_size) const;
  std::string ToString() const;
};

// Uniform sample without replacement; original relative order preserved.
// With `stratified`, each label keeps its share of the sample (largest
// remainder apportionment, ties to the label seen first).
Corpus Subsample(const Corpus& corpus, const SampleSize& size, uint64_t seed,
                 bool stratified = false);

CorpusStats ComputeStats(const Corpus& corpus);

}  // namespace aeda

#endif  // AEDA_CORPUS_H_
