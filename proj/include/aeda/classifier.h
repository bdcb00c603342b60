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

#ifndef AEDA_CLASSIFIER_H_
#define AEDA_CLASSIFIER_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aeda/corpus.h"

namespace aeda {

// Multinomial naive Bayes over whitespace tokens with additive smoothing.
//
//   log P(c)     = log(n_docs(c) / n_docs)
//   log P(w | c) = log((count(c, w) + s) / (total(c) + s * |V|))
//
// Tokens outside the training vocabulary score the smoothed unseen mass
// log(s / (total(c) + s * |V|)). No randomness anywhere.
class BowModel {
 public:
  // Throws aeda::Error on an empty or single-class corpus or a
  // non-positive smoothing constant.
  static BowModel Fit(const Corpus& train, double smoothing = 1.0);

  // Labels in lexicographic order; every per-class vector below is indexed
  // the same way.
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& class_log_priors() const { return log_priors_; }
  size_t vocab_size() const { return token_index_.size(); }
  double smoothing() const { return smoothing_; }
  bool InVocab(std::string_view token) const;

  // log P(token | labels()[c]); unseen tokens get the unseen mass.
  double TokenLogLikelihood(size_t c, std::string_view token) const;

  // Unnormalized log posterior per class.
  std::vector<double> JointLogScores(std::string_view text) const;
  // Normalized posterior per class.
  std::vector<double> Posterior(std::string_view text) const;

  // Highest joint score; ties go to the lexicographically smallest label.
  const std::string& Predict(std::string_view text) const;

  // The vocabulary, sorted.
  std::vector<std::string> Vocabulary() const;

 private:
  double smoothing_ = 1.0;
  std::vector<std::string> labels_;
  std::vector<double> log_priors_;
  std::vector<double> unseen_log_likelihood_;
  std::unordered_map<std::string, size_t> token_index_;
  // token_log_likelihoods_[t * labels_.size() + c]
  std::vector<double> token_log_likelihoods_;
};

// Fraction of test examples whose predicted label matches. Throws
// aeda::Error on an empty test set.
double Accuracy(const BowModel& model, const Corpus& test);

}  // namespace aeda

#endif  // AEDA_CLASSIFIER_H_
