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
#include <map>
#include <set>

#include "aeda/error.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace aeda {
namespace {

const std::vector<std::string> kMarks = {".", ";", "?", ":", "!", ","};

TokenSeq ReviewSentence() {
  return Tokenize("a sad , superior human comedy played out on the back roads of life .");
}

bool IsSubsequence(const TokenSeq& needle, const TokenSeq& hay) {
  size_t i = 0;
  for (const auto& tok : hay) {
    if (i < needle.size() && tok == needle[i]) ++i;
  }
  return i == needle.size();
}

TEST(DrawInsertionCountTest, Range) {
  EXPECT_EQ(MaxInsertions(15, {1, 3}), 5u);
  EXPECT_EQ(MaxInsertions(2, {1, 3}), 1u);
  EXPECT_EQ(MaxInsertions(5, {1, 3}), 1u);
  EXPECT_EQ(MaxInsertions(6, {1, 3}), 2u);
  EXPECT_EQ(MaxInsertions(30, {1, 3}), 10u);
  EXPECT_EQ(MaxInsertions(10, {1, 1}), 10u);
}

TEST(DrawInsertionCountTest, FifteenTokensDrawsOneToFive) {
  RngStream rng(5);
  std::set<size_t> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(DrawInsertionCount(15, {1, 3}, rng));
  EXPECT_EQ(seen, (std::set<size_t>{1, 2, 3, 4, 5}));
}

TEST(DrawInsertionCountTest, ShortInputForcedToOne) {
  RngStream rng(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(DrawInsertionCount(2, {1, 3}, rng), 1u);
}

TEST(DrawInsertionCountTest, ZeroLengthRejected) {
  RngStream rng(5);
  EXPECT_THROW(DrawInsertionCount(0, {1, 3}, rng), std::invalid_argument);
}

TEST(DrawInsertionCountTest, ThirtyTokensUniformFrequencies) {
  RngStream rng(2024);
  std::vector<uint64_t> counts(10, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[DrawInsertionCount(30, {1, 3}, rng) - 1];
  for (auto c : counts) EXPECT_NEAR(double(c) / draws, 0.1, 0.01);
  EXPECT_TRUE(testing::ChiSquareUniform(counts, 1e-3).pass);
}

TEST(AedaParamsTest, Validation) {
  AedaParams p;
  EXPECT_NO_THROW(p.Validate());
  p.ratio = {0, 1};
  EXPECT_THROW(p.Validate(), Error);
  p.ratio = {4, 3};
  EXPECT_THROW(p.Validate(), Error);
  p = AedaParams{};
  p.punctuation = {};
  EXPECT_THROW(p.Validate(), Error);
  p.punctuation = {".", "."};
  EXPECT_THROW(p.Validate(), Error);
  p.punctuation = {". ."};
  EXPECT_THROW(p.Validate(), Error);
}

TEST(AedaAugmentTest, SingleTokenGetsOneLeadingMark) {
  const AedaParams params;
  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    RngStream rng(seed);
    const TokenSeq out = AedaAugment({"hello"}, params, rng);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[1], "hello");
    seen.insert(out[0]);
  }
  EXPECT_EQ(seen, std::set<std::string>(kMarks.begin(), kMarks.end()));
}

TEST(AedaAugmentTest, EmptyInputRejected) {
  RngStream rng(1);
  EXPECT_THROW(AedaAugment({}, AedaParams{}, rng), std::invalid_argument);
}

TEST(AedaAugmentTest, TwoSemicolonAugmentationIsReachable) {
  // Two ';' marks, before "of" and before the final ".". With 15 tokens the
  // count is uniform on 1..5, so this output has probability
  // 1/5 * 1/C(15,2) * (1/6)^2, about 1 in 19000.
  const TokenSeq s = ReviewSentence();
  ASSERT_EQ(s.size(), 15u);
  const std::string target =
      "a sad , superior human comedy played out on the back roads ; of life ; .";
  const TokenSeq aug = Tokenize(target);
  EXPECT_TRUE(IsSubsequence(s, aug));
  EXPECT_LE(aug.size() - s.size(), MaxInsertions(s.size(), AedaParams{}.ratio));
  bool found = false;
  for (uint64_t seed = 0; seed < 2000000 && !found; ++seed) {
    RngStream rng(seed);
    found = Detokenize(AedaAugment(s, AedaParams{}, rng)) == target;
  }
  EXPECT_TRUE(found);
}

TEST(AedaAugmentTest, GoldenSingleSequenceSeed42) {
  // Produced by tools/reference_aeda.py single --seed 42.
  RngStream rng(42);
  const TokenSeq out =
      AedaAugment({"the", "cat", "sat", "on", "the", "mat"}, AedaParams{}, rng);
  EXPECT_EQ(Detokenize(out), "the . cat sat on ! the mat");
}

TEST(AedaAugmentTest, TraceDescribesInsertions) {
  const AedaParams params;
  const TokenSeq s = ReviewSentence();
  for (uint64_t seed = 0; seed < 500; ++seed) {
    RngStream rng(seed);
    const AedaTrace t = AedaAugmentTraced(s, params, rng);
    ASSERT_EQ(t.slots.size(), t.marks.size());
    ASSERT_EQ(t.output_positions.size(), t.slots.size());
    ASSERT_EQ(t.output.size(), s.size() + t.slots.size());
    ASSERT_EQ(std::set<size_t>(t.slots.begin(), t.slots.end()).size(), t.slots.size());
    // Removing the recorded positions recovers the input exactly.
    TokenSeq stripped;
    size_t next = 0;
    for (size_t i = 0; i < t.output.size(); ++i) {
      if (next < t.output_positions.size() && t.output_positions[next] == i) {
        ++next;
        continue;
      }
      stripped.push_back(t.output[i]);
    }
    ASSERT_EQ(stripped, s);
    // Each mark sits directly before its slot's token.
    std::vector<size_t> sorted_slots = t.slots;
    std::sort(sorted_slots.begin(), sorted_slots.end());
    for (size_t k = 0; k < sorted_slots.size(); ++k) {
      ASSERT_EQ(t.output_positions[k], sorted_slots[k] + k);
      ASSERT_EQ(t.output[t.output_positions[k] + 1], s[sorted_slots[k]]);
    }
  }
}

TEST(AedaAugmentTest, ExactDistributionWithColliding) {
  // ',' before ',' and ',' before "superior" both yield "a sad , , superior
  // human"; the oracle sums over such collisions.
  const TokenSeq s = {"a", "sad", ",", "superior", "human"};
  const auto exact = testing::AedaExactDistribution(s, kMarks);
  EXPECT_EQ(exact.size(), 29u);
  std::map<std::string, double> empirical;
  const int samples = 100000;
  RngStream rng(77);
  for (int i = 0; i < samples; ++i) {
    empirical[Detokenize(AedaAugment(s, AedaParams{}, rng))] += 1.0 / samples;
  }
  EXPECT_LT(testing::TotalVariation(exact, empirical), 0.02);
}

TEST(AedaAugmentTest, CustomRatioAndAlphabet) {
  AedaParams params;
  params.ratio = {1, 1};
  params.punctuation = {"<p>"};
  const TokenSeq s = {"a", "b", "c", "d"};
  std::set<size_t> added;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    RngStream rng(seed);
    const TokenSeq out = AedaAugment(s, params, rng);
    added.insert(out.size() - s.size());
    for (const auto& tok : out) ASSERT_TRUE(tok == "<p>" || tok.size() == 1);
  }
  EXPECT_EQ(added, (std::set<size_t>{1, 2, 3, 4}));
}

Corpus SmallCorpus() {
  return {{"1", "good movie"}, {"0", "the plot is thin ."}, {"1", "hello"}};
}

TEST(AedaBatchTest, LayoutAndLabels) {
  const Corpus out = AedaBatch(SmallCorpus(), 9, AedaParams{}, 3);
  ASSERT_EQ(out.size(), 30u);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(out[i * 10], SmallCorpus()[i]);
    for (size_t j = 1; j < 10; ++j) {
      EXPECT_EQ(out[i * 10 + j].label, SmallCorpus()[i].label);
      EXPECT_TRUE(IsSubsequence(Tokenize(SmallCorpus()[i].text), Tokenize(out[i * 10 + j].text)));
    }
  }
}

TEST(AedaBatchTest, ZeroCopiesIsIdentity) {
  EXPECT_EQ(AedaBatch(SmallCorpus(), 0, AedaParams{}, 3), SmallCorpus());
}

TEST(AedaBatchTest, CopiesUseDerivedStreams) {
  const Corpus out = AedaBatch(SmallCorpus(), 2, AedaParams{}, 99);
  RngStream rng = RngStream::Derive(99, {1, 1});
  EXPECT_EQ(out[1 * 3 + 2].text,
            Detokenize(AedaAugment(Tokenize(SmallCorpus()[1].text), AedaParams{}, rng)));
}

TEST(AedaBatchTest, DeterministicAndSchedulingIndependent) {
  Corpus corpus;
  for (int i = 0; i < 300; ++i) {
    corpus.push_back({i % 2 ? "a" : "b", "token" + std::to_string(i) + " x y z w v u"});
  }
  const Corpus serial = AedaBatch(corpus, 5, AedaParams{}, 17, 1);
  EXPECT_EQ(serial, AedaBatch(corpus, 5, AedaParams{}, 17, 1));
  EXPECT_EQ(serial, AedaBatch(corpus, 5, AedaParams{}, 17, 8));
  EXPECT_NE(serial, AedaBatch(corpus, 5, AedaParams{}, 18, 1));
}

TEST(AedaBatchTest, EmptyTextRejected) {
  const Corpus corpus = {{"1", "ok"}, {"0", "   "}};
  EXPECT_THROW(AedaBatch(corpus, 1, AedaParams{}, 0), Error);
  EXPECT_THROW(AedaBatch(corpus, 1, AedaParams{}, 0, 4), Error);
}

}  // namespace
}  // namespace aeda
