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

#ifndef AEDA_EDA_H_
#define AEDA_EDA_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "aeda/corpus.h"
#include "aeda/ratio.h"
#include "aeda/rng.h"
#include "aeda/text.h"

namespace aeda {

// Word-level EDA baseline: synonym replacement (SR), random insertion (RI),
// random swap (RS) and random deletion (RD).

struct EdaParams {
  Ratio alpha_sr{1, 10};
  Ratio alpha_ri{1, 10};
  Ratio alpha_rs{1, 10};
  double p_rd = 0.1;
  size_t num_aug = 9;

  void Validate() const;
};

// Lowercase word -> synonym phrases (stored case kept, may be multi-word).
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  // Parses `word<TAB>syn1,syn2,...` lines; blank lines and lines starting
  // with '#' are skipped. Keys are lowercased. Throws ParseError on a
  // missing tab, an empty key or synonym, a duplicate key, or a word
  // listed as its own synonym.
  static SynonymLexicon Parse(std::string_view content,
                              const std::string& source = "<memory>");
  static SynonymLexicon Load(const std::filesystem::path& path);

  // Throws aeda::Error if an entry breaks the invariants above.
  void Add(std::string_view word, std::vector<std::string> synonyms);

  // Lookup lowercases the probe. Returns nullptr when there is no entry.
  const std::vector<std::string>* Find(std::string_view word) const;

  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::map<std::string, std::vector<std::string>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::unordered_set<std::string> words);

  // The bundled English list.
  static StopwordSet English();
  // One word per line; blank lines and '#' comments skipped.
  static StopwordSet Parse(std::string_view content);
  static StopwordSet Load(const std::filesystem::path& path);

  bool Contains(std::string_view word) const;
  size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

TokenSeq SynonymReplacement(const TokenSeq& tokens, size_t n,
                            const SynonymLexicon& lexicon,
                            const StopwordSet& stopwords, RngStream& rng);

// Only single-token synonyms are inserted.
TokenSeq RandomInsertion(const TokenSeq& tokens, size_t n,
                         const SynonymLexicon& lexicon,
                         const StopwordSet& stopwords, RngStream& rng);

TokenSeq RandomSwap(const TokenSeq& tokens, size_t n, RngStream& rng);

TokenSeq RandomDeletion(const TokenSeq& tokens, double p, RngStream& rng);

enum class EdaOp { kSynonymReplacement, kRandomInsertion, kRandomSwap, kRandomDeletion };

std::string_view EdaOpName(EdaOp op);

struct EdaVariant {
  EdaOp op;
  TokenSeq tokens;
};

// Per-op intensity: 0 when alpha is 0, else max(1, round(alpha * len)).
size_t EdaOpCount(Ratio alpha, size_t len);

// Each op produces ceil(num_aug / 4) variants (SR, RI, RS, RD in turn); the
// pooled list is shuffled and cut to num_aug.
std::vector<EdaVariant> EdaAugmentTraced(const TokenSeq& tokens,
                                         const EdaParams& params,
                                         const SynonymLexicon& lexicon,
                                         const StopwordSet& stopwords,
                                         RngStream& rng);
std::vector<TokenSeq> EdaAugment(const TokenSeq& tokens, const EdaParams& params,
                                 const SynonymLexicon& lexicon,
                                 const StopwordSet& stopwords, RngStream& rng);

// Each example i is emitted followed by params.num_aug variants drawn from
// RngStream::Derive(master_seed, {i}). Output does not depend on `jobs`.
Corpus EdaBatch(const Corpus& corpus, const EdaParams& params,
                const SynonymLexicon& lexicon, const StopwordSet& stopwords,
                uint64_t master_seed, size_t jobs = 1);

}  // namespace aeda

#endif  // AEDA_EDA_H_
