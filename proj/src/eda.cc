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

#include "aeda/eda.h"

#include <algorithm>

#include "aeda/error.h"
#include "aeda/parallel.h"

namespace aeda {

namespace {

// Same list the reference EDA implementation ships with.
constexpr const char* kEnglishStopwords[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "your",
    "yours", "yourself", "yourselves", "he", "him", "his", "himself", "she",
    "her", "hers", "herself", "it", "its", "itself", "they", "them", "their",
    "theirs", "themselves", "what", "which", "who", "whom", "this", "that",
    "these", "those", "am", "is", "are", "was", "were", "be", "been", "being",
    "have", "has", "had", "having", "do", "does", "did", "doing", "a", "an",
    "the", "and", "but", "if", "or", "because", "as", "until", "while", "of",
    "at", "by", "for", "with", "about", "against", "between", "into",
    "through", "during", "before", "after", "above", "below", "to", "from",
    "up", "down", "in", "out", "on", "off", "over", "under", "again",
    "further", "then", "once", "here", "there", "when", "where", "why", "how",
    "all", "any", "both", "each", "few", "more", "most", "other", "some",
    "such", "no", "nor", "not", "only", "own", "same", "so", "than", "too",
    "very", "s", "t", "can", "will", "just", "don", "should", "now"};

void CheckRate(Ratio r, const char* name) {
  if (r.den <= 0 || r.num < 0 || Ratio{1, 1} < r) {
    throw Error(std::string(name) + " must lie in [0, 1], got " + r.ToString());
  }
}

bool IsSingleToken(const std::string& phrase) { return !ContainsWhitespace(phrase); }

}  // namespace

void EdaParams::Validate() const {
  CheckRate(alpha_sr, "alpha_sr");
  CheckRate(alpha_ri, "alpha_ri");
  CheckRate(alpha_rs, "alpha_rs");
  if (!(p_rd >= 0.0 && p_rd <= 1.0)) {
    throw Error("p_rd must lie in [0, 1], got " + std::to_string(p_rd));
  }
}

void SynonymLexicon::Add(std::string_view word, std::vector<std::string> synonyms) {
  const std::string key = AsciiLower(Trim(word));
  if (key.empty()) throw Error("lexicon entry has an empty word");
  if (synonyms.empty()) throw Error("lexicon entry '" + key + "' has no synonyms");
  for (auto& syn : synonyms) {
    syn = std::string(Trim(syn));
    if (syn.empty()) throw Error("lexicon entry '" + key + "' has an empty synonym");
    if (AsciiLower(syn) == key) {
      throw Error("lexicon entry '" + key + "' lists itself as a synonym");
    }
  }
  if (!entries_.emplace(key, std::move(synonyms)).second) {
    throw Error("lexicon entry '" + key + "' defined twice");
  }
}

SynonymLexicon SynonymLexicon::Parse(std::string_view content,
                                     const std::string& source) {
  SynonymLexicon lex;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    ++line_no;
    size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    const std::string_view line = content.substr(pos, eol - pos);
    pos = eol + 1;
    if (Trim(line).empty() || line.front() == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(source, line_no, "expected word<TAB>synonyms");
    }
    std::vector<std::string> synonyms;
    std::string_view rest = line.substr(tab + 1);
    for (;;) {
      const size_t comma = rest.find(',');
      synonyms.emplace_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    try {
      lex.Add(line.substr(0, tab), std::move(synonyms));
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return lex;
}

SynonymLexicon SynonymLexicon::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path), path.string());
}

const std::vector<std::string>* SynonymLexicon::Find(std::string_view word) const {
  const auto it = entries_.find(AsciiLower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

StopwordSet::StopwordSet(std::unordered_set<std::string> words)
    : words_(std::move(words)) {}

StopwordSet StopwordSet::English() {
  return StopwordSet(std::unordered_set<std::string>(std::begin(kEnglishStopwords),
                                                     std::end(kEnglishStopwords)));
}

StopwordSet StopwordSet::Parse(std::string_view content) {
  std::unordered_set<std::string> words;
  size_t pos = 0;
  while (pos < content.size()) {
    size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    const std::string_view line = Trim(content.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;
    words.insert(AsciiLower(line));
  }
  return StopwordSet(std::move(words));
}

StopwordSet StopwordSet::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

bool StopwordSet::Contains(std::string_view word) const {
  return words_.count(AsciiLower(word)) > 0;
}

TokenSeq SynonymReplacement(const TokenSeq& tokens, size_t n,
                            const SynonymLexicon& lexicon,
                            const StopwordSet& stopwords, RngStream& rng) {
  if (n == 0 || lexicon.empty()) return tokens;
  std::vector<size_t> eligible;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!stopwords.Contains(tokens[i]) && lexicon.Find(tokens[i]) != nullptr) {
      eligible.push_back(i);
    }
  }
  const size_t k = std::min(n, eligible.size());
  for (size_t i = 0; i < k; ++i) {
    const size_t j = i + static_cast<size_t>(rng.UniformBelow(eligible.size() - i));
    std::swap(eligible[i], eligible[j]);
  }
  std::vector<const std::string*> replacement(tokens.size(), nullptr);
  for (size_t i = 0; i < k; ++i) {
    const auto& synonyms = *lexicon.Find(tokens[eligible[i]]);
    replacement[eligible[i]] = &synonyms[rng.UniformBelow(synonyms.size())];
  }
  TokenSeq out;
  out.reserve(tokens.size() + k);
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (replacement[i] == nullptr) {
      out.push_back(tokens[i]);
    } else {
      for (auto& piece : Tokenize(*replacement[i])) out.push_back(std::move(piece));
    }
  }
  return out;
}

TokenSeq RandomInsertion(const TokenSeq& tokens, size_t n,
                         const SynonymLexicon& lexicon,
                         const StopwordSet& stopwords, RngStream& rng) {
  constexpr int kAttempts = 10;
  TokenSeq out = tokens;
  if (out.empty() || lexicon.empty()) return out;
  std::vector<const std::string*> candidates;
  for (size_t step = 0; step < n; ++step) {
    candidates.clear();
    for (int attempt = 0; attempt < kAttempts && candidates.empty(); ++attempt) {
      const std::string& word = out[rng.UniformBelow(out.size())];
      if (stopwords.Contains(word)) continue;
      if (const auto* synonyms = lexicon.Find(word)) {
        for (const auto& syn : *synonyms) {
          if (IsSingleToken(syn)) candidates.push_back(&syn);
        }
      }
    }
    if (candidates.empty()) continue;
    const std::string synonym = *candidates[rng.UniformBelow(candidates.size())];
    const size_t at = static_cast<size_t>(rng.UniformBelow(out.size() + 1));
    out.insert(out.begin() + static_cast<ptrdiff_t>(at), synonym);
  }
  return out;
}

TokenSeq RandomSwap(const TokenSeq& tokens, size_t n, RngStream& rng) {
  TokenSeq out = tokens;
  const size_t len = out.size();
  if (len < 2) return out;
  for (size_t step = 0; step < n; ++step) {
    const size_t a = static_cast<size_t>(rng.UniformBelow(len));
    size_t b = static_cast<size_t>(rng.UniformBelow(len - 1));
    if (b >= a) ++b;
    std::swap(out[a], out[b]);
  }
  return out;
}

TokenSeq RandomDeletion(const TokenSeq& tokens, double p, RngStream& rng) {
  if (tokens.size() <= 1) return tokens;
  TokenSeq out;
  for (const auto& tok : tokens) {
    if (rng.UniformUnit() >= p) out.push_back(tok);
  }
  if (out.empty()) out.push_back(tokens[rng.UniformBelow(tokens.size())]);
  return out;
}

std::string_view EdaOpName(EdaOp op) {
  switch (op) {
    case EdaOp::kSynonymReplacement: return "sr";
    case EdaOp::kRandomInsertion: return "ri";
    case EdaOp::kRandomSwap: return "rs";
    case EdaOp::kRandomDeletion: return "rd";
  }
  return "?";
}

size_t EdaOpCount(Ratio alpha, size_t len) {
  if (alpha.IsZero()) return 0;
  return static_cast<size_t>(std::max<int64_t>(1, alpha.RoundTimes(static_cast<int64_t>(len))));
}

std::vector<EdaVariant> EdaAugmentTraced(const TokenSeq& tokens,
                                         const EdaParams& params,
                                         const SynonymLexicon& lexicon,
                                         const StopwordSet& stopwords,
                                         RngStream& rng) {
  if (tokens.empty()) throw std::invalid_argument("EdaAugment: empty token sequence");
  const size_t len = tokens.size();
  const size_t per_op = (params.num_aug + 3) / 4;
  const size_t n_sr = EdaOpCount(params.alpha_sr, len);
  const size_t n_ri = EdaOpCount(params.alpha_ri, len);
  const size_t n_rs = EdaOpCount(params.alpha_rs, len);

  std::vector<EdaVariant> variants;
  variants.reserve(4 * per_op);
  for (size_t i = 0; i < per_op; ++i) {
    variants.push_back({EdaOp::kSynonymReplacement,
                        SynonymReplacement(tokens, n_sr, lexicon, stopwords, rng)});
  }
  for (size_t i = 0; i < per_op; ++i) {
    variants.push_back({EdaOp::kRandomInsertion,
                        RandomInsertion(tokens, n_ri, lexicon, stopwords, rng)});
  }
  for (size_t i = 0; i < per_op; ++i) {
    variants.push_back({EdaOp::kRandomSwap, RandomSwap(tokens, n_rs, rng)});
  }
  for (size_t i = 0; i < per_op; ++i) {
    variants.push_back({EdaOp::kRandomDeletion, RandomDeletion(tokens, params.p_rd, rng)});
  }
  rng.Shuffle(std::span<EdaVariant>(variants));
  variants.resize(params.num_aug);
  return variants;
}

std::vector<TokenSeq> EdaAugment(const TokenSeq& tokens, const EdaParams& params,
                                 const SynonymLexicon& lexicon,
                                 const StopwordSet& stopwords, RngStream& rng) {
  std::vector<TokenSeq> out;
  for (auto& v : EdaAugmentTraced(tokens, params, lexicon, stopwords, rng)) {
    out.push_back(std::move(v.tokens));
  }
  return out;
}

Corpus EdaBatch(const Corpus& corpus, const EdaParams& params,
                const SynonymLexicon& lexicon, const StopwordSet& stopwords,
                uint64_t master_seed, size_t jobs) {
  params.Validate();
  const size_t block = 1 + params.num_aug;
  Corpus out(corpus.size() * block);
  ParallelFor(corpus.size(), jobs, [&](size_t i) {
    const LabeledExample& ex = corpus[i];
    out[i * block] = ex;
    if (params.num_aug == 0) return;
    const TokenSeq tokens = Tokenize(ex.text);
    if (tokens.empty()) {
      throw Error("example " + std::to_string(i + 1) + " has no tokens to augment");
    }
    RngStream rng = RngStream::Derive(master_seed, {i});
    const auto variants = EdaAugment(tokens, params, lexicon, stopwords, rng);
    for (size_t j = 0; j < variants.size(); ++j) {
      out[i * block + 1 + j] = {ex.label, Detokenize(variants[j])};
    }
  });
  return out;
}

}  // namespace aeda
