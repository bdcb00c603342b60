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

#include "aeda/corpus.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "aeda/error.h"
#include "aeda/rng.h"
#include "aeda/text.h"

namespace aeda {

namespace fs = std::filesystem;

namespace {

// Partial Fisher-Yates over [0, n); returns the first k picks.
std::vector<size_t> SampleIndices(size_t n, size_t k, RngStream& rng) {
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  for (size_t i = 0; i < k; ++i) {
    const size_t j = i + static_cast<size_t>(rng.UniformBelow(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace

void ValidateExample(const LabeledExample& example) {
  if (example.label.empty()) throw Error("example has an empty label");
  for (const std::string* field : {&example.label, &example.text}) {
    if (field->find_first_of("\t\n") != std::string::npos) {
      throw Error("example field contains a tab or newline: '" + *field + "'");
    }
  }
}

Corpus ParseTsv(std::string_view content, const std::string& source) {
  Corpus corpus;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    ++line_no;
    size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    const std::string_view line = content.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(source, line_no, "expected label<TAB>text, found no tab");
    }
    LabeledExample ex{std::string(line.substr(0, tab)),
                      std::string(line.substr(tab + 1))};
    if (ex.label.empty()) throw ParseError(source, line_no, "empty label");
    if (ex.text.find('\t') != std::string::npos) {
      throw ParseError(source, line_no, "text contains a tab");
    }
    corpus.push_back(std::move(ex));
  }
  if (corpus.empty()) throw Error(source + ": corpus is empty");
  return corpus;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("read failed for '" + path.string() + "'");
  return buf.str();
}

Corpus ReadTsv(const fs::path& path) {
  return ParseTsv(ReadFile(path), path.string());
}

std::string FormatTsv(const Corpus& corpus) {
  std::string out;
  for (const auto& ex : corpus) {
    ValidateExample(ex);
    out += ex.label;
    out += '\t';
    out += ex.text;
    out += '\n';
  }
  return out;
}

void WriteFileAtomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("write failed for '" + path.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot move output into place at '" + path.string() + "'");
  }
}

void WriteTsv(const Corpus& corpus, const fs::path& path) {
  WriteFileAtomic(path, FormatTsv(corpus));
}

std::pair<Corpus, Corpus> Split(const Corpus& corpus, Ratio test_fraction,
                                uint64_t seed) {
  const size_t n = corpus.size();
  if (n < 2) throw Error("split needs at least 2 examples");
  if (test_fraction.IsZero() || !(test_fraction < Ratio{1, 1})) {
    throw Error("test fraction must lie strictly between 0 and 1");
  }
  const Ratio train_fraction{test_fraction.den - test_fraction.num,
                             test_fraction.den};
  const size_t n_train = static_cast<size_t>(train_fraction.CeilTimes(n));
  if (n_train == 0 || n_train >= n) {
    throw Error("test fraction " + test_fraction.ToString() + " leaves an empty side for " +
                std::to_string(n) + " examples");
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  RngStream rng(seed);
  rng.Shuffle(std::span<size_t>(order));
  std::pair<Corpus, Corpus> out;
  out.first.reserve(n_train);
  out.second.reserve(n - n_train);
  for (size_t i = 0; i < n; ++i) {
    (i < n_train ? out.first : out.second).push_back(corpus[order[i]]);
  }
  return out;
}

SampleSize SampleSize::Parse(std::string_view text) {
  const std::string_view t = Trim(text);
  if (t == "full") return Fraction(Ratio{1, 1});
  if (t.find_first_of("./") != std::string_view::npos) {
    const Ratio r = Ratio::Parse(t);
    if (r.IsZero() || Ratio{1, 1} < r) {
      throw Error("sample fraction '" + std::string(t) + "' must lie in (0, 1]");
    }
    return Fraction(r);
  }
  const Ratio r = Ratio::Parse(t);
  if (r.IsZero()) throw Error("sample size must be positive");
  return Count(static_cast<size_t>(r.num));
}

size_t SampleSize::Resolve(size_t corpus_size) const {
  if (const auto* n = std::get_if<size_t>(&value)) {
    if (*n > corpus_size) {
      throw Error("requested sample of " + std::to_string(*n) +
                  " exceeds corpus size " + std::to_string(corpus_size));
    }
    return *n;
  }
  const Ratio& r = std::get<Ratio>(value);
  const auto k = static_cast<size_t>(r.FloorTimes(static_cast<int64_t>(corpus_size)));
  return std::max<size_t>(k, corpus_size == 0 ? 0 : 1);
}

std::string SampleSize::ToString() const {
  if (const auto* n = std::get_if<size_t>(&value)) return std::to_string(*n);
  const Ratio& r = std::get<Ratio>(value);
  return r == Ratio{1, 1} ? "full" : r.ToString();
}

Corpus Subsample(const Corpus& corpus, const SampleSize& size, uint64_t seed,
                 bool stratified) {
  const size_t n = corpus.size();
  const size_t k = size.Resolve(n);
  RngStream rng(seed);
  std::vector<size_t> picked;
  if (k == n) {
    picked.resize(n);
    std::iota(picked.begin(), picked.end(), size_t{0});
  } else if (!stratified) {
    picked = SampleIndices(n, k, rng);
  } else {
    // Group indices by label in first-appearance order.
    std::map<std::string, size_t> group_of;
    std::vector<std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) {
      auto [it, inserted] = group_of.emplace(corpus[i].label, groups.size());
      if (inserted) groups.emplace_back();
      groups[it->second].push_back(i);
    }
    std::vector<size_t> quota(groups.size());
    std::vector<std::pair<uint64_t, size_t>> remainders;  // (remainder, group)
    size_t assigned = 0;
    for (size_t g = 0; g < groups.size(); ++g) {
      const uint64_t scaled = static_cast<uint64_t>(k) * groups[g].size();
      quota[g] = scaled / n;
      assigned += quota[g];
      remainders.emplace_back(scaled % n, g);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (size_t r = 0; assigned < k; ++r, ++assigned) ++quota[remainders[r].second];
    for (size_t g = 0; g < groups.size(); ++g) {
      for (size_t local : SampleIndices(groups[g].size(), quota[g], rng)) {
        picked.push_back(groups[g][local]);
      }
    }
  }
  std::sort(picked.begin(), picked.end());
  Corpus out;
  out.reserve(picked.size());
  for (size_t i : picked) out.push_back(corpus[i]);
  return out;
}

CorpusStats ComputeStats(const Corpus& corpus) {
  if (corpus.empty()) throw Error("stats of an empty corpus");
  std::unordered_set<std::string> labels;
  std::unordered_set<std::string> vocab;
  size_t total_tokens = 0;
  for (const auto& ex : corpus) {
    labels.insert(ex.label);
    for (auto& tok : Tokenize(ex.text)) {
      ++total_tokens;
      vocab.insert(std::move(tok));
    }
  }
  CorpusStats stats;
  stats.n_class = labels.size();
  stats.n_examples = corpus.size();
  stats.avg_len = static_cast<double>(total_tokens) / static_cast<double>(corpus.size());
  stats.vocab_size = vocab.size();
  return stats;
}

}  // namespace aeda
