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

#include "aeda/harness.h"

#include <cmath>
#include <filesystem>
#include <mutex>
#include <set>

#include "aeda/classifier.h"
#include "aeda/error.h"
#include "gtest/gtest.h"
#include "json.hpp"

#ifndef AEDA_DATA_DIR
#error "AEDA_DATA_DIR must point at the bundled data directory"
#endif
#ifndef AEDA_GOLDEN_DIR
#error "AEDA_GOLDEN_DIR must point at tests/golden"
#endif

namespace aeda {
namespace {

namespace fs = std::filesystem;

// Two classes with distinct vocabularies plus shared filler; train and
// test texts are disjoint so the augmentation trace can be checked.
std::pair<Corpus, Corpus> TinyData() {
  const std::vector<std::string> pos = {"good", "great", "fun", "nice", "superb"};
  const std::vector<std::string> neg = {"bad", "awful", "dull", "poor", "lame"};
  const std::vector<std::string> filler = {"the", "film", "was", "a", "plot", "and"};
  Corpus train, test;
  RngStream rng(1);
  for (int i = 0; i < 160; ++i) {
    const bool is_pos = i % 2 == 0;
    const auto& own = is_pos ? pos : neg;
    std::string text = "ex" + std::to_string(i);
    for (int k = 0; k < 5; ++k) {
      text += " " + (rng.UniformBelow(3) == 0 ? own[rng.UniformBelow(own.size())]
                                              : filler[rng.UniformBelow(filler.size())]);
    }
    (i < 120 ? train : test).push_back({is_pos ? "1" : "0", text + " ."});
  }
  return {train, test};
}

ExperimentConfig GridConfig() {
  ExperimentConfig c;
  c.train_path = "train.tsv";
  c.test_path = "test.tsv";
  c.methods = {Method::kOriginal, Method::kEda, Method::kAeda};
  c.sizes = {SampleSize::Count(40), SampleSize::Fraction({1, 1})};
  c.num_augs = {0, 4};
  c.seeds = {0, 1, 2, 3, 4};
  return c;
}

CellContext Context() {
  CellContext ctx;
  ctx.lexicon.Add("good", {"great", "fine"});
  ctx.lexicon.Add("bad", {"poor", "lousy"});
  return ctx;
}

TEST(MethodTest, NamesRoundTrip) {
  for (Method m : {Method::kOriginal, Method::kEda, Method::kAeda}) {
    EXPECT_EQ(ParseMethod(MethodName(m)), m);
  }
  EXPECT_THROW(ParseMethod("bert"), Error);
}

TEST(RunCellTest, OriginalIgnoresNumAugAndSeed) {
  const auto [train, test] = TinyData();
  const CellContext ctx = Context();
  const double base = RunCell(Method::kOriginal, train, test, 0, 0, ctx);
  for (size_t n : {1, 9, 16}) {
    for (uint64_t seed : {1, 7, 99}) {
      EXPECT_EQ(RunCell(Method::kOriginal, train, test, n, seed, ctx), base);
    }
  }
}

TEST(RunCellTest, ZeroAugmentationsMatchOriginal) {
  const auto [train, test] = TinyData();
  const CellContext ctx = Context();
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const double base = RunCell(Method::kOriginal, train, test, 0, seed, ctx);
    EXPECT_EQ(RunCell(Method::kAeda, train, test, 0, seed, ctx), base);
    EXPECT_EQ(RunCell(Method::kEda, train, test, 0, seed, ctx), base);
  }
}

TEST(RunCellTest, TrainingSetComposition) {
  const auto [train, test] = TinyData();
  const CellContext ctx = Context();
  const Corpus aeda = BuildTrainingSet(Method::kAeda, train, 9, 3, ctx);
  EXPECT_EQ(aeda.size(), train.size() * 10);
  EXPECT_EQ(BuildTrainingSet(Method::kEda, train, 4, 3, ctx).size(), train.size() * 5);
  EXPECT_EQ(BuildTrainingSet(Method::kOriginal, train, 9, 3, ctx), train);
  EXPECT_EQ(aeda, BuildTrainingSet(Method::kAeda, train, 9, 3, ctx));
  EXPECT_NE(aeda, BuildTrainingSet(Method::kAeda, train, 9, 4, ctx));
}

TEST(RunCellTest, TestDataNeverAugmented) {
  const auto [train, test] = TinyData();
  std::set<std::string> train_texts, test_texts;
  for (const auto& e : train) train_texts.insert(e.text);
  for (const auto& e : test) test_texts.insert(e.text);
  CellContext ctx = Context();
  std::mutex mu;
  size_t calls = 0;
  bool leaked = false;
  ctx.on_augment = [&](const LabeledExample& e) {
    std::lock_guard<std::mutex> lock(mu);
    ++calls;
    leaked |= test_texts.count(e.text) > 0 || train_texts.count(e.text) == 0;
  };
  const EvalReport r = RunExperiment(GridConfig(), train, test, ctx, 4);
  EXPECT_GT(calls, 0u);
  EXPECT_FALSE(leaked);
}

TEST(RunExperimentTest, GridCompleteAndCanonical) {
  const auto [train, test] = TinyData();
  const ExperimentConfig config = GridConfig();
  const EvalReport r = RunExperiment(config, train, test, Context());
  ASSERT_EQ(r.cells.size(), 3u * 2 * 2 * 5);
  size_t i = 0;
  for (Method m : config.methods) {
    for (const auto& size : config.sizes) {
      for (size_t n : config.num_augs) {
        for (uint64_t seed : config.seeds) {
          const CellResult& c = r.cells[i++];
          EXPECT_EQ(c.method, m);
          EXPECT_EQ(c.size, size.ToString());
          EXPECT_EQ(c.num_aug, n);
          EXPECT_EQ(c.seed, seed);
          EXPECT_EQ(c.train_size, size.Resolve(train.size()));
          EXPECT_GE(c.accuracy, 0.0);
          EXPECT_LE(c.accuracy, 1.0);
        }
      }
    }
  }
  EXPECT_EQ(r.aggregates.size(), 3u * 2 * 2);
}

TEST(RunExperimentTest, AggregatesRecomputeFromCells) {
  const auto [train, test] = TinyData();
  const EvalReport r = RunExperiment(GridConfig(), train, test, Context());
  for (const auto& agg : r.aggregates) {
    std::vector<double> xs;
    for (const auto& c : r.cells) {
      if (c.method == agg.method && c.size == agg.size && c.num_aug == agg.num_aug) {
        xs.push_back(c.accuracy);
      }
    }
    ASSERT_EQ(xs.size(), agg.runs);
    double mean = 0;
    for (double x : xs) mean += x / xs.size();
    double var = 0;
    for (double x : xs) var += (x - mean) * (x - mean) / (xs.size() - 1);
    EXPECT_NEAR(agg.mean, mean, 1e-12);
    EXPECT_NEAR(agg.stddev, std::sqrt(var), 1e-12);
  }
}

TEST(RunExperimentTest, ParallelismDoesNotChangeReport) {
  const auto [train, test] = TinyData();
  const std::string serial = ReportToJson(RunExperiment(GridConfig(), train, test, Context(), 1));
  EXPECT_EQ(serial, ReportToJson(RunExperiment(GridConfig(), train, test, Context(), 1)));
  EXPECT_EQ(serial, ReportToJson(RunExperiment(GridConfig(), train, test, Context(), 6)));
}

TEST(RunExperimentTest, AggregateMeanOfTwoCells) {
  const std::vector<CellResult> cells = {
      {Method::kAeda, "500", 500, 9, 0, 0.8},
      {Method::kAeda, "500", 500, 9, 1, 0.9},
  };
  const auto aggs = ComputeAggregates(cells);
  ASSERT_EQ(aggs.size(), 1u);
  EXPECT_NEAR(aggs[0].mean, 0.85, 1e-15);
  EXPECT_NEAR(aggs[0].stddev, std::sqrt(0.005), 1e-15);
}

TEST(RunExperimentTest, FailingCellNamesCoordinates) {
  auto [train, test] = TinyData();
  train.push_back({"1", "   "});  // cannot be augmented
  ExperimentConfig config = GridConfig();
  config.sizes = {SampleSize::Fraction({1, 1})};
  config.methods = {Method::kAeda};
  config.num_augs = {4};
  config.seeds = {3};
  try {
    RunExperiment(config, train, test, Context(), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("method=aeda, size=full, num_aug=4, seed=3"),
              std::string::npos)
        << e.what();
  }
}

TEST(ImprovementTableTest, DeltaInPoints) {
  EXPECT_NEAR(DeltaPoints(0.750, 0.782), 3.2, 1e-9);
  EXPECT_NEAR(DeltaPoints(0.879, 0.863), -1.6, 1e-9);
  EXPECT_EQ(DeltaPoints(0.8125, 0.8125), 0.0);
}

TEST(ImprovementTableTest, FromReport) {
  EvalReport r;
  r.config = GridConfig();
  r.cells = {
      {Method::kOriginal, "500", 500, 9, 0, 0.74}, {Method::kOriginal, "500", 500, 9, 1, 0.76},
      {Method::kAeda, "500", 500, 9, 0, 0.78},     {Method::kAeda, "500", 500, 9, 1, 0.786},
      {Method::kEda, "500", 500, 9, 0, 0.75},      {Method::kEda, "500", 500, 9, 1, 0.75},
  };
  r.aggregates = ComputeAggregates(r.cells);
  const auto table = ImprovementTable(r);
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[0].method, Method::kAeda);
  EXPECT_NEAR(table[0].delta_points, 3.3, 1e-9);
  EXPECT_NEAR(table[1].delta_points, 0.0, 1e-12);

  r.cells.erase(r.cells.begin(), r.cells.begin() + 2);
  r.aggregates = ComputeAggregates(r.cells);
  EXPECT_THROW(ImprovementTable(r), Error);
}

TEST(ReportTest, JsonSchema) {
  const auto [train, test] = TinyData();
  const EvalReport r = RunExperiment(GridConfig(), train, test, Context());
  const auto doc = nlohmann::json::parse(ReportToJson(r));
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["cells"].size(), 60u);
  EXPECT_EQ(doc["aggregates"].size(), 12u);
  EXPECT_EQ(doc["improvement_table"].size(), 8u);
  EXPECT_EQ(doc["cells"][0]["method"], "original");
  EXPECT_EQ(doc["config"]["aeda"]["ratio"], "1/3");
}

TEST(ReportTest, CsvColumns) {
  const auto [train, test] = TinyData();
  const EvalReport r = RunExperiment(GridConfig(), train, test, Context());
  const std::string csv = CellsToCsv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "method,size,train_size,num_aug,seed,accuracy");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 61);
  const std::string agg = AggregatesToCsv(r);
  EXPECT_EQ(agg.substr(0, agg.find('\n')), "method,size,train_size,num_aug,runs,mean,stddev");
}

TEST(ConfigTest, ParsesAllKeys) {
  const std::string text =
      "# comment\n"
      "train = data/train.tsv\n"
      "test = /abs/test.tsv\n"
      "methods = original, aeda\n"
      "sizes = 500, 0.1, full\n"
      "num_augs = 0,1,9\n"
      "seeds = 0, 1, 20\n"
      "aeda.ratio = 1/4\n"
      "aeda.punctuation = . , !\n"
      "eda.alpha_sr = 0.2\n"
      "eda.alpha_ri = 0\n"
      "eda.alpha_rs = 0.05\n"
      "eda.p_rd = 0.3\n"
      "lexicon = lex.tsv\n"
      "stopwords = stop.txt\n"
      "smoothing = 0.5\n"
      "stratified = true\n";
  const ExperimentConfig c = ExperimentConfig::Parse(text, "/base");
  EXPECT_EQ(c.train_path, fs::path("/base/data/train.tsv"));
  EXPECT_EQ(c.test_path, fs::path("/abs/test.tsv"));
  EXPECT_EQ(c.methods, (std::vector<Method>{Method::kOriginal, Method::kAeda}));
  ASSERT_EQ(c.sizes.size(), 3u);
  EXPECT_EQ(c.sizes[0].Resolve(1000), 500u);
  EXPECT_EQ(c.sizes[1].Resolve(1000), 100u);
  EXPECT_EQ(c.sizes[2].Resolve(1000), 1000u);
  EXPECT_EQ(c.num_augs, (std::vector<size_t>{0, 1, 9}));
  EXPECT_EQ(c.seeds, (std::vector<uint64_t>{0, 1, 20}));
  EXPECT_EQ(c.aeda.ratio, (Ratio{1, 4}));
  EXPECT_EQ(c.aeda.punctuation, (std::vector<std::string>{".", ",", "!"}));
  EXPECT_EQ(c.eda.alpha_sr, (Ratio{1, 5}));
  EXPECT_TRUE(c.eda.alpha_ri.IsZero());
  EXPECT_DOUBLE_EQ(c.eda.p_rd, 0.3);
  EXPECT_EQ(*c.lexicon_path, fs::path("/base/lex.tsv"));
  EXPECT_EQ(*c.stopwords_path, fs::path("/base/stop.txt"));
  EXPECT_DOUBLE_EQ(c.smoothing, 0.5);
  EXPECT_TRUE(c.stratified);
}

TEST(ConfigTest, Errors) {
  const std::string base = "train = a\ntest = b\nseeds = 1\n";
  EXPECT_NO_THROW(ExperimentConfig::Parse(base, "."));
  EXPECT_THROW(ExperimentConfig::Parse("test = b\nseeds = 1\n", "."), Error);
  EXPECT_THROW(ExperimentConfig::Parse(base + "seeds = 2\n", "."), ParseError);
  EXPECT_THROW(ExperimentConfig::Parse("train = a\ntest = b\nseeds = 1, 1\n", "."), Error);
  EXPECT_THROW(ExperimentConfig::Parse(base + "methods = original, bert\n", "."), ParseError);
  EXPECT_THROW(ExperimentConfig::Parse(base + "colour = blue\n", "."), ParseError);
  EXPECT_THROW(ExperimentConfig::Parse(base + "methods =\n", "."), Error);
  EXPECT_THROW(ExperimentConfig::Parse(base + "aeda.ratio = 3/2\n", "."), Error);
  try {
    ExperimentConfig::Parse(base + "\nno equals sign\n", ".", "grid.cfg");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
  }
}

TEST(GoldenReportTest, AedaNineCopiesOnBundledCorpus) {
  // Regression freeze of per-cell accuracies on the bundled split; regenerate
  // tests/golden/report_aeda9_cells.csv only for intentional behaviour changes.
  const fs::path data = AEDA_DATA_DIR;
  ExperimentConfig config;
  config.train_path = data / "synthetic_train.tsv";
  config.test_path = data / "synthetic_test.tsv";
  config.methods = {Method::kOriginal, Method::kAeda};
  config.sizes = {SampleSize::Count(500)};
  config.num_augs = {9};
  config.seeds = {7};
  const EvalReport r = RunExperiment(config, 2);
  const std::string golden = ReadFile(fs::path(AEDA_GOLDEN_DIR) / "report_aeda9_cells.csv");
  EXPECT_EQ(CellsToCsv(r), golden);
}

}  // namespace
}  // namespace aeda
