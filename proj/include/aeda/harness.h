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

#ifndef AEDA_HARNESS_H_
#define AEDA_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aeda/augment.h"
#include "aeda/corpus.h"
#include "aeda/eda.h"

namespace aeda {

enum class Method { kOriginal, kEda, kAeda };

std::string_view MethodName(Method method);
// Throws aeda::Error for anything but "original", "eda" or "aeda".
Method ParseMethod(std::string_view name);

// One experiment grid: methods x sizes x num_augs x seeds.
//
// Config files are flat `key = value` text; '#' starts a comment line and
// lists are comma separated (the punctuation alphabet is whitespace
// separated, since ',' is itself a mark). Relative paths resolve against the
// config file's directory. Keys:
//
//   train, test            TSV corpora (required)
//   methods                subset of original,eda,aeda
//   sizes                  counts ("500"), fractions ("0.1", "1/2") or "full"
//   num_augs               non-negative integers
//   seeds                  distinct unsigned 64-bit integers
//   aeda.ratio             insertion ratio, default 1/3
//   aeda.punctuation       default ". ; ? : ! ,"
//   eda.alpha_sr / eda.alpha_ri / eda.alpha_rs / eda.p_rd
//   lexicon, stopwords     optional paths (default: no lexicon, English list)
//   smoothing              classifier smoothing, default 1
//   stratified             true/false, label-stratified subsampling
struct ExperimentConfig {
  std::filesystem::path train_path;
  std::filesystem::path test_path;
  std::vector<Method> methods;
  std::vector<SampleSize> sizes;
  std::vector<size_t> num_augs;
  std::vector<uint64_t> seeds;
  AedaParams aeda;
  EdaParams eda;
  std::optional<std::filesystem::path> lexicon_path;
  std::optional<std::filesystem::path> stopwords_path;
  double smoothing = 1.0;
  bool stratified = false;

  // Throws aeda::Error on an empty list, repeated seed or bad parameter.
  void Validate() const;

  static ExperimentConfig Parse(std::string_view content,
                                const std::filesystem::path& base_dir,
                                const std::string& source = "<memory>");
  static ExperimentConfig Load(const std::filesystem::path& path);
};

// Shared, read-only inputs for every cell of a grid.
struct CellContext {
  AedaParams aeda;
  EdaParams eda;
  SynonymLexicon lexicon;
  StopwordSet stopwords = StopwordSet::English();
  double smoothing = 1.0;
  // Called with every example handed to an augmenter. Test hook.
  std::function<void(const LabeledExample&)> on_augment;
};

// Builds the training set (original examples plus num_aug augmented copies
// each, for eda/aeda) and scores the classifier on `test`. The augmentation
// stream is derived from `seed`; method=original ignores num_aug and seed.
// Test data is never augmented.
double RunCell(Method method, const Corpus& train, const Corpus& test,
               size_t num_aug, uint64_t seed, const CellContext& context);

// Training set RunCell() fits on, exposed for inspection.
Corpus BuildTrainingSet(Method method, const Corpus& train, size_t num_aug,
                        uint64_t seed, const CellContext& context);

struct CellResult {
  Method method;
  std::string size;  // as configured
  size_t train_size;  // resolved example count before augmentation
  size_t num_aug;
  uint64_t seed;
  double accuracy;
};

struct Aggregate {
  Method method;
  std::string size;
  size_t train_size;
  size_t num_aug;
  size_t runs;
  double mean;
  double stddev;  // sample standard deviation; 0 for a single run
};

struct EvalReport {
  static constexpr int kSchemaVersion = 1;

  ExperimentConfig config;
  // Canonical order: methods, sizes, num_augs, seeds, each as configured.
  std::vector<CellResult> cells;
  std::vector<Aggregate> aggregates;
};

// Mean and sample standard deviation of cells sharing (method, size,
// num_aug), in canonical order.
std::vector<Aggregate> ComputeAggregates(const std::vector<CellResult>& cells);

// Runs the full grid. Per cell, `seed` drives the training subsample and the
// augmentation streams, nothing else. `jobs` bounds the cell worker pool;
// the report does not depend on it.
EvalReport RunExperiment(const ExperimentConfig& config, const Corpus& train,
                         const Corpus& test, const CellContext& context,
                         size_t jobs = 1);
// Loads corpora, lexicon and stopwords named by the config.
EvalReport RunExperiment(const ExperimentConfig& config, size_t jobs = 1);

struct Improvement {
  Method method;
  std::string size;
  size_t train_size;
  size_t num_aug;
  double baseline_mean;
  double method_mean;
  double delta_points;  // 100 * (method_mean - baseline_mean)
};

// Signed percentage-point gain of every non-original aggregate over the
// original aggregate with the same size and num_aug. Throws aeda::Error if
// that baseline is missing.
std::vector<Improvement> ImprovementTable(const EvalReport& report);

// Percentage points between two mean accuracies given as fractions.
double DeltaPoints(double baseline_mean, double method_mean);

std::string ReportToJson(const EvalReport& report);
// One row per cell: method,size,train_size,num_aug,seed,accuracy.
std::string CellsToCsv(const EvalReport& report);
// One row per aggregate: method,size,train_size,num_aug,runs,mean,stddev.
std::string AggregatesToCsv(const EvalReport& report);

}  // namespace aeda

#endif  // AEDA_HARNESS_H_
