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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <optional>

#include "CLI11.hpp"
#include "aeda/augment.h"
#include "aeda/corpus.h"
#include "aeda/eda.h"
#include "aeda/error.h"
#include "aeda/harness.h"

namespace aeda::cli {

namespace {

struct AugmentFlags {
  std::string input;
  std::string output;
  std::string method;
  size_t num_aug = 0;
  uint64_t seed = 0;
  std::string ratio = "1/3";
  std::string punctuation = ". ; ? : ! ,";
  std::optional<std::string> lexicon;
  std::optional<std::string> stopwords;
  std::string alpha_sr = "0.1";
  std::string alpha_ri = "0.1";
  std::string alpha_rs = "0.1";
  double p_rd = 0.1;
  size_t jobs = 1;
};

struct SplitFlags {
  std::string input;
  std::string test_frac;
  uint64_t seed = 0;
  std::string out_train;
  std::string out_test;
};

struct ReportFlags {
  std::string config;
  std::string report;
  std::optional<std::string> csv;
  std::optional<std::string> summary_csv;
  size_t jobs = 1;
};

int CmdAugment(const AugmentFlags& f, std::ostream& err) {
  const Corpus corpus = ReadTsv(f.input);
  err << "seed: " << f.seed << "\n";
  Corpus out;
  if (f.method == "aeda") {
    AedaParams params;
    params.ratio = Ratio::Parse(f.ratio);
    params.punctuation = Tokenize(f.punctuation);
    out = AedaBatch(corpus, f.num_aug, params, f.seed, f.jobs);
  } else {
    EdaParams params;
    params.alpha_sr = Ratio::Parse(f.alpha_sr);
    params.alpha_ri = Ratio::Parse(f.alpha_ri);
    params.alpha_rs = Ratio::Parse(f.alpha_rs);
    params.p_rd = f.p_rd;
    params.num_aug = f.num_aug;
    SynonymLexicon lexicon;
    if (f.lexicon) {
      lexicon = SynonymLexicon::Load(*f.lexicon);
    } else {
      err << "warning: no --lexicon given; synonym replacement and insertion "
             "leave sentences unchanged\n";
    }
    const StopwordSet stopwords =
        f.stopwords ? StopwordSet::Load(*f.stopwords) : StopwordSet::English();
    out = EdaBatch(corpus, params, lexicon, stopwords, f.seed, f.jobs);
  }
  WriteTsv(out, f.output);
  err << "wrote " << out.size() << " examples to " << f.output << "\n";
  return kOk;
}

int CmdStats(const std::string& input, std::ostream& out) {
  const CorpusStats s = ComputeStats(ReadTsv(input));
  char avg[32];
  std::snprintf(avg, sizeof(avg), "%.2f", s.avg_len);
  out << "N_class\t" << s.n_class << "\n"
      << "L_avg\t" << avg << "\n"
      << "N\t" << s.n_examples << "\n"
      << "|V|\t" << s.vocab_size << "\n";
  return kOk;
}

int CmdSplit(const SplitFlags& f, std::ostream& err) {
  const Corpus corpus = ReadTsv(f.input);
  err << "seed: " << f.seed << "\n";
  const auto [train, test] = Split(corpus, Ratio::Parse(f.test_frac), f.seed);
  WriteTsv(train, f.out_train);
  WriteTsv(test, f.out_test);
  err << "train " << train.size() << ", test " << test.size() << "\n";
  return kOk;
}

void PrintAggregates(const EvalReport& report, std::ostream& out) {
  out << "method\tsize\ttrain_size\tnum_aug\truns\tmean\tstddev\n";
  char line[256];
  for (const auto& agg : report.aggregates) {
    std::snprintf(line, sizeof(line), "%s\t%s\t%zu\t%zu\t%zu\t%.4f\t%.4f\n",
                  std::string(MethodName(agg.method)).c_str(), agg.size.c_str(),
                  agg.train_size, agg.num_aug, agg.runs, agg.mean, agg.stddev);
    out << line;
  }
}

void PrintImprovements(const EvalReport& report, std::ostream& out) {
  out << "method\tsize\tnum_aug\toriginal\tmethod_mean\tdelta_points\n";
  char line[256];
  for (const auto& imp : ImprovementTable(report)) {
    std::snprintf(line, sizeof(line), "%s\t%s\t%zu\t%.4f\t%.4f\t%+.2f\n",
                  std::string(MethodName(imp.method)).c_str(), imp.size.c_str(),
                  imp.num_aug, imp.baseline_mean, imp.method_mean, imp.delta_points);
    out << line;
  }
}

int CmdReport(const ReportFlags& f, bool sweep, std::ostream& out, std::ostream& err) {
  const ExperimentConfig config = ExperimentConfig::Load(f.config);
  err << "seeds:";
  for (uint64_t s : config.seeds) err << " " << s;
  err << "\n";
  const EvalReport report = RunExperiment(config, f.jobs);
  WriteFileAtomic(f.report, ReportToJson(report));
  if (f.csv) WriteFileAtomic(*f.csv, CellsToCsv(report));
  if (f.summary_csv) WriteFileAtomic(*f.summary_csv, AggregatesToCsv(report));
  PrintAggregates(report, out);
  const bool has_original =
      std::find(config.methods.begin(), config.methods.end(), Method::kOriginal) !=
      config.methods.end();
  if (sweep && has_original) {
    out << "\n";
    PrintImprovements(report, out);
  }
  err << report.cells.size() << " cells; report written to " << f.report << "\n";
  return kOk;
}

void AddReportFlags(CLI::App* sub, ReportFlags& f) {
  sub->add_option("--config", f.config, "Experiment config file (key = value)")
      ->required();
  sub->add_option("--report", f.report, "Output JSON report path")->required();
  sub->add_option("--csv", f.csv, "Also write per-cell results as CSV");
  sub->add_option("--summary-csv", f.summary_csv,
                  "Also write per-group mean/stddev as CSV");
  sub->add_option("--jobs", f.jobs, "Worker threads for grid cells (0 = all cores)")
      ->capture_default_str();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Punctuation-insertion (AEDA) and EDA text augmentation toolkit"};
  app.name("aeda");
  app.require_subcommand(1);

  AugmentFlags aug;
  CLI::App* augment = app.add_subcommand(
      "augment", "Write each example followed by N augmented copies");
  augment->add_option("--input", aug.input, "Input TSV (label<TAB>text)")->required();
  augment->add_option("--output", aug.output, "Output TSV")->required();
  augment->add_option("--method", aug.method, "Augmentation method")
      ->required()
      ->check(CLI::IsMember({"aeda", "eda"}));
  augment->add_option("--num-aug", aug.num_aug, "Augmented copies per example")
      ->required();
  augment->add_option("--seed", aug.seed, "Master seed (required)")->required();
  augment->add_option("--ratio", aug.ratio, "AEDA insertion ratio, e.g. 1/3 or 0.25")
      ->capture_default_str();
  augment->add_option("--punctuation", aug.punctuation,
                      "AEDA marks, whitespace separated")
      ->capture_default_str();
  augment->add_option("--lexicon", aug.lexicon, "EDA synonym lexicon (word<TAB>syn,syn)");
  augment->add_option("--stopwords", aug.stopwords,
                      "EDA stopword list, one per line (default: bundled English)");
  augment->add_option("--alpha-sr", aug.alpha_sr, "EDA synonym replacement rate")
      ->capture_default_str();
  augment->add_option("--alpha-ri", aug.alpha_ri, "EDA random insertion rate")
      ->capture_default_str();
  augment->add_option("--alpha-rs", aug.alpha_rs, "EDA random swap rate")
      ->capture_default_str();
  augment->add_option("--p-rd", aug.p_rd, "EDA random deletion probability")
      ->capture_default_str();
  augment->add_option("--jobs", aug.jobs, "Worker threads (0 = all cores)")
      ->capture_default_str();

  std::string stats_input;
  CLI::App* stats = app.add_subcommand("stats", "Print N_class, L_avg, N and |V|");
  stats->add_option("--input", stats_input, "Input TSV")->required();

  SplitFlags spl;
  CLI::App* split = app.add_subcommand("split", "Random train/test split");
  split->add_option("--input", spl.input, "Input TSV")->required();
  split->add_option("--test-frac", spl.test_frac, "Test fraction in (0, 1)")->required();
  split->add_option("--seed", spl.seed, "Shuffle seed (required)")->required();
  split->add_option("--out-train", spl.out_train, "Train TSV output")->required();
  split->add_option("--out-test", spl.out_test, "Test TSV output")->required();

  ReportFlags eval_flags;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Run an experiment config and write the JSON report");
  AddReportFlags(evaluate, eval_flags);

  ReportFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Like evaluate, and also print gains over the original data");
  AddReportFlags(sweep, sweep_flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUserError;
  }

  try {
    if (augment->parsed()) return CmdAugment(aug, err);
    if (stats->parsed()) return CmdStats(stats_input, out);
    if (split->parsed()) return CmdSplit(spl, err);
    if (evaluate->parsed()) return CmdReport(eval_flags, false, out, err);
    if (sweep->parsed()) return CmdReport(sweep_flags, true, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace aeda::cli
