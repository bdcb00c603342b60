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

#include <charconv>
#include <cmath>
#include <map>
#include <tuple>

#include "aeda/classifier.h"
#include "aeda/error.h"
#include "aeda/parallel.h"
#include "json.hpp"

namespace aeda {

namespace {

std::string FormatDouble(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string CellName(Method method, const std::string& size, size_t num_aug,
                     uint64_t seed) {
  return "cell (method=" + std::string(MethodName(method)) + ", size=" + size +
         ", num_aug=" + std::to_string(num_aug) + ", seed=" + std::to_string(seed) + ")";
}

}  // namespace

Corpus BuildTrainingSet(Method method, const Corpus& train, size_t num_aug,
                        uint64_t seed, const CellContext& context) {
  if (method == Method::kOriginal || num_aug == 0) return train;
  if (context.on_augment) {
    for (const auto& ex : train) context.on_augment(ex);
  }
  if (method == Method::kAeda) {
    const uint64_t aug_seed =
        RngStream::DeriveSeed(seed, {static_cast<uint64_t>(StreamDomain::kAugmentAeda)});
    return AedaBatch(train, num_aug, context.aeda, aug_seed);
  }
  EdaParams eda = context.eda;
  eda.num_aug = num_aug;
  const uint64_t aug_seed =
      RngStream::DeriveSeed(seed, {static_cast<uint64_t>(StreamDomain::kAugmentEda)});
  return EdaBatch(train, eda, context.lexicon, context.stopwords, aug_seed);
}

double RunCell(Method method, const Corpus& train, const Corpus& test,
               size_t num_aug, uint64_t seed, const CellContext& context) {
  const BowModel model =
      BowModel::Fit(BuildTrainingSet(method, train, num_aug, seed, context),
                    context.smoothing);
  return Accuracy(model, test);
}

std::vector<Aggregate> ComputeAggregates(const std::vector<CellResult>& cells) {
  // Group by (method, size, num_aug) keeping first-appearance order, which
  // is canonical when the cells are.
  std::vector<Aggregate> out;
  std::vector<std::vector<double>> samples;
  std::map<std::tuple<Method, std::string, size_t>, size_t> index;
  for (const auto& cell : cells) {
    auto [it, inserted] =
        index.emplace(std::make_tuple(cell.method, cell.size, cell.num_aug), out.size());
    if (inserted) {
      out.push_back({cell.method, cell.size, cell.train_size, cell.num_aug, 0, 0.0, 0.0});
      samples.emplace_back();
    }
    samples[it->second].push_back(cell.accuracy);
  }
  for (size_t g = 0; g < out.size(); ++g) {
    const auto& xs = samples[g];
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    out[g].runs = xs.size();
    out[g].mean = mean;
    out[g].stddev = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
  }
  return out;
}

EvalReport RunExperiment(const ExperimentConfig& config, const Corpus& train,
                         const Corpus& test, const CellContext& context,
                         size_t jobs) {
  config.Validate();
  if (train.empty()) throw Error("training corpus is empty");
  if (test.empty()) throw Error("test corpus is empty");

  EvalReport report;
  report.config = config;
  for (Method method : config.methods) {
    for (const SampleSize& size : config.sizes) {
      for (size_t num_aug : config.num_augs) {
        for (uint64_t seed : config.seeds) {
          report.cells.push_back({method, size.ToString(), 0, num_aug, seed, 0.0});
        }
      }
    }
  }
  const size_t per_method = report.cells.size() / config.methods.size();
  const size_t per_size = per_method / config.sizes.size();

  ParallelFor(report.cells.size(), jobs, [&](size_t i) {
    CellResult& cell = report.cells[i];
    const SampleSize& size = config.sizes[(i % per_method) / per_size];
    try {
      const uint64_t sample_seed = RngStream::DeriveSeed(
          cell.seed, {static_cast<uint64_t>(StreamDomain::kSubsample)});
      const Corpus sample = Subsample(train, size, sample_seed, config.stratified);
      cell.train_size = sample.size();
      cell.accuracy = RunCell(cell.method, sample, test, cell.num_aug, cell.seed, context);
    } catch (const std::exception& e) {
      throw Error(CellName(cell.method, cell.size, cell.num_aug, cell.seed) +
                  " failed: " + e.what());
    }
  });
  report.aggregates = ComputeAggregates(report.cells);
  return report;
}

EvalReport RunExperiment(const ExperimentConfig& config, size_t jobs) {
  config.Validate();
  const Corpus train = ReadTsv(config.train_path);
  const Corpus test = ReadTsv(config.test_path);
  CellContext context;
  context.aeda = config.aeda;
  context.eda = config.eda;
  context.smoothing = config.smoothing;
  if (config.lexicon_path) context.lexicon = SynonymLexicon::Load(*config.lexicon_path);
  if (config.stopwords_path) context.stopwords = StopwordSet::Load(*config.stopwords_path);
  return RunExperiment(config, train, test, context, jobs);
}

double DeltaPoints(double baseline_mean, double method_mean) {
  return 100.0 * (method_mean - baseline_mean);
}

std::vector<Improvement> ImprovementTable(const EvalReport& report) {
  std::map<std::pair<std::string, size_t>, const Aggregate*> baseline;
  for (const auto& agg : report.aggregates) {
    if (agg.method == Method::kOriginal) baseline[{agg.size, agg.num_aug}] = &agg;
  }
  std::vector<Improvement> out;
  for (const auto& agg : report.aggregates) {
    if (agg.method == Method::kOriginal) continue;
    const auto it = baseline.find({agg.size, agg.num_aug});
    if (it == baseline.end()) {
      throw Error("no original-method cells for size " + agg.size + ", num_aug " +
                  std::to_string(agg.num_aug));
    }
    out.push_back({agg.method, agg.size, agg.train_size, agg.num_aug, it->second->mean,
                   agg.mean, DeltaPoints(it->second->mean, agg.mean)});
  }
  return out;
}

std::string ReportToJson(const EvalReport& report) {
  using nlohmann::ordered_json;
  const ExperimentConfig& c = report.config;
  ordered_json config;
  config["train"] = c.train_path.string();
  config["test"] = c.test_path.string();
  config["methods"] = ordered_json::array();
  for (Method m : c.methods) config["methods"].push_back(MethodName(m));
  config["sizes"] = ordered_json::array();
  for (const auto& s : c.sizes) config["sizes"].push_back(s.ToString());
  config["num_augs"] = c.num_augs;
  config["seeds"] = c.seeds;
  config["aeda"] = {{"ratio", c.aeda.ratio.ToString()}, {"punctuation", c.aeda.punctuation}};
  config["eda"] = {{"alpha_sr", c.eda.alpha_sr.ToString()},
                   {"alpha_ri", c.eda.alpha_ri.ToString()},
                   {"alpha_rs", c.eda.alpha_rs.ToString()},
                   {"p_rd", c.eda.p_rd}};
  config["lexicon"] = c.lexicon_path ? ordered_json(c.lexicon_path->string()) : ordered_json();
  config["stopwords"] =
      c.stopwords_path ? ordered_json(c.stopwords_path->string()) : ordered_json();
  config["smoothing"] = c.smoothing;
  config["stratified"] = c.stratified;

  ordered_json cells = ordered_json::array();
  for (const auto& cell : report.cells) {
    cells.push_back({{"method", MethodName(cell.method)},
                     {"size", cell.size},
                     {"train_size", cell.train_size},
                     {"num_aug", cell.num_aug},
                     {"seed", cell.seed},
                     {"accuracy", cell.accuracy}});
  }
  ordered_json aggregates = ordered_json::array();
  for (const auto& agg : report.aggregates) {
    aggregates.push_back({{"method", MethodName(agg.method)},
                          {"size", agg.size},
                          {"train_size", agg.train_size},
                          {"num_aug", agg.num_aug},
                          {"runs", agg.runs},
                          {"mean", agg.mean},
                          {"stddev", agg.stddev}});
  }
  ordered_json doc;
  doc["schema_version"] = EvalReport::kSchemaVersion;
  doc["config"] = std::move(config);
  doc["cells"] = std::move(cells);
  doc["aggregates"] = std::move(aggregates);
  bool has_baseline = false;
  for (Method m : c.methods) has_baseline |= m == Method::kOriginal;
  if (has_baseline) {
    ordered_json improvements = ordered_json::array();
    for (const auto& imp : ImprovementTable(report)) {
      improvements.push_back({{"method", MethodName(imp.method)},
                              {"size", imp.size},
                              {"num_aug", imp.num_aug},
                              {"baseline_mean", imp.baseline_mean},
                              {"method_mean", imp.method_mean},
                              {"delta_points", imp.delta_points}});
    }
    doc["improvement_table"] = std::move(improvements);
  }
  return doc.dump(2) + "\n";
}

std::string CellsToCsv(const EvalReport& report) {
  std::string out = "method,size,train_size,num_aug,seed,accuracy\n";
  for (const auto& cell : report.cells) {
    out += std::string(MethodName(cell.method)) + "," + cell.size + "," +
           std::to_string(cell.train_size) + "," + std::to_string(cell.num_aug) + "," +
           std::to_string(cell.seed) + "," + FormatDouble(cell.accuracy) + "\n";
  }
  return out;
}

std::string AggregatesToCsv(const EvalReport& report) {
  std::string out = "method,size,train_size,num_aug,runs,mean,stddev\n";
  for (const auto& agg : report.aggregates) {
    out += std::string(MethodName(agg.method)) + "," + agg.size + "," +
           std::to_string(agg.train_size) + "," + std::to_string(agg.num_aug) + "," +
           std::to_string(agg.runs) + "," + FormatDouble(agg.mean) + "," +
           FormatDouble(agg.stddev) + "\n";
  }
  return out;
}

}  // namespace aeda
