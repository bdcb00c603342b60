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

#include <charconv>
#include <set>

#include "aeda/error.h"
#include "aeda/harness.h"
#include "aeda/text.h"

namespace aeda {

namespace fs = std::filesystem;

namespace {

std::vector<std::string_view> SplitList(std::string_view value) {
  std::vector<std::string_view> items;
  for (;;) {
    const size_t comma = value.find(',');
    const std::string_view item = Trim(value.substr(0, comma));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

uint64_t ParseUnsigned(std::string_view text) {
  uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

double ParseDouble(std::string_view text) {
  double v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error("expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

bool ParseBool(std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw Error("expected true or false, got '" + std::string(text) + "'");
}

}  // namespace

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kOriginal: return "original";
    case Method::kEda: return "eda";
    case Method::kAeda: return "aeda";
  }
  return "?";
}

Method ParseMethod(std::string_view name) {
  if (name == "original") return Method::kOriginal;
  if (name == "eda") return Method::kEda;
  if (name == "aeda") return Method::kAeda;
  throw Error("unknown method '" + std::string(name) + "' (want original, eda or aeda)");
}

void ExperimentConfig::Validate() const {
  if (train_path.empty()) throw Error("config: 'train' is required");
  if (test_path.empty()) throw Error("config: 'test' is required");
  if (methods.empty()) throw Error("config: 'methods' is empty");
  if (sizes.empty()) throw Error("config: 'sizes' is empty");
  if (num_augs.empty()) throw Error("config: 'num_augs' is empty");
  if (seeds.empty()) throw Error("config: 'seeds' is empty");
  if (std::set<Method>(methods.begin(), methods.end()).size() != methods.size()) {
    throw Error("config: a method is listed twice");
  }
  if (std::set<uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size()) {
    throw Error("config: seeds must be distinct");
  }
  if (!(smoothing > 0.0)) throw Error("config: smoothing must be positive");
  aeda.Validate();
  eda.Validate();
}

ExperimentConfig ExperimentConfig::Parse(std::string_view content,
                                         const fs::path& base_dir,
                                         const std::string& source) {
  ExperimentConfig config;
  config.methods = {Method::kOriginal, Method::kEda, Method::kAeda};
  config.sizes = {SampleSize::Fraction(Ratio{1, 1})};
  config.num_augs = {9};
  const auto resolve = [&](std::string_view p) {
    fs::path path{std::string(p)};
    return path.is_absolute() ? path : base_dir / path;
  };

  std::set<std::string> seen;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    ++line_no;
    size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    const std::string_view line = Trim(content.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(source, line_no, "expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ParseError(source, line_no, "key '" + key + "' set twice");
    }
    try {
      if (key == "train") {
        config.train_path = resolve(value);
      } else if (key == "test") {
        config.test_path = resolve(value);
      } else if (key == "methods") {
        config.methods.clear();
        for (auto item : SplitList(value)) config.methods.push_back(ParseMethod(item));
      } else if (key == "sizes" || key == "fractions") {
        config.sizes.clear();
        for (auto item : SplitList(value)) config.sizes.push_back(SampleSize::Parse(item));
      } else if (key == "num_augs") {
        config.num_augs.clear();
        for (auto item : SplitList(value)) config.num_augs.push_back(ParseUnsigned(item));
      } else if (key == "seeds") {
        config.seeds.clear();
        for (auto item : SplitList(value)) config.seeds.push_back(ParseUnsigned(item));
      } else if (key == "aeda.ratio") {
        config.aeda.ratio = Ratio::Parse(value);
      } else if (key == "aeda.punctuation") {
        config.aeda.punctuation = Tokenize(value);
      } else if (key == "eda.alpha_sr") {
        config.eda.alpha_sr = Ratio::Parse(value);
      } else if (key == "eda.alpha_ri") {
        config.eda.alpha_ri = Ratio::Parse(value);
      } else if (key == "eda.alpha_rs") {
        config.eda.alpha_rs = Ratio::Parse(value);
      } else if (key == "eda.p_rd") {
        config.eda.p_rd = ParseDouble(value);
      } else if (key == "lexicon") {
        config.lexicon_path = resolve(value);
      } else if (key == "stopwords") {
        config.stopwords_path = resolve(value);
      } else if (key == "smoothing") {
        config.smoothing = ParseDouble(value);
      } else if (key == "stratified") {
        config.stratified = ParseBool(value);
      } else {
        throw Error("unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  config.Validate();
  return config;
}

ExperimentConfig ExperimentConfig::Load(const fs::path& path) {
  return Parse(ReadFile(path), path.parent_path(), path.string());
}

}  // namespace aeda
