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

#include "aeda/classifier.h"

#include <algorithm>
#include <cmath>

#include "aeda/error.h"
#include "aeda/text.h"

namespace aeda {

BowModel BowModel::Fit(const Corpus& train, double smoothing) {
  if (train.empty()) throw Error("cannot fit a classifier on an empty corpus");
  if (!(smoothing > 0.0)) throw Error("smoothing must be positive");

  std::map<std::string, size_t> doc_counts;
  for (const auto& ex : train) ++doc_counts[ex.label];
  if (doc_counts.size() < 2) {
    throw Error("training corpus has a single class '" + train.front().label + "'");
  }

  BowModel model;
  model.smoothing_ = smoothing;
  std::map<std::string, size_t> class_index;
  for (const auto& [label, count] : doc_counts) {
    class_index.emplace(label, model.labels_.size());
    model.labels_.push_back(label);
    model.log_priors_.push_back(std::log(static_cast<double>(count)) -
                                std::log(static_cast<double>(train.size())));
  }
  const size_t n_class = model.labels_.size();

  // Raw counts first; the vocabulary has to be complete before any
  // denominator is known.
  std::vector<double> counts;
  std::vector<double> totals(n_class, 0.0);
  for (const auto& ex : train) {
    const size_t c = class_index.at(ex.label);
    for (auto& tok : Tokenize(ex.text)) {
      auto [it, inserted] = model.token_index_.emplace(std::move(tok), model.token_index_.size());
      if (inserted) counts.resize(counts.size() + n_class, 0.0);
      counts[it->second * n_class + c] += 1.0;
      totals[c] += 1.0;
    }
  }

  const double vocab = static_cast<double>(model.token_index_.size());
  model.unseen_log_likelihood_.resize(n_class);
  std::vector<double> log_denominator(n_class);
  for (size_t c = 0; c < n_class; ++c) {
    log_denominator[c] = std::log(totals[c] + smoothing * vocab);
    model.unseen_log_likelihood_[c] = std::log(smoothing) - log_denominator[c];
  }
  model.token_log_likelihoods_.resize(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) {
    model.token_log_likelihoods_[i] =
        std::log(counts[i] + smoothing) - log_denominator[i % n_class];
  }
  return model;
}

bool BowModel::InVocab(std::string_view token) const {
  return token_index_.find(std::string(token)) != token_index_.end();
}

double BowModel::TokenLogLikelihood(size_t c, std::string_view token) const {
  const auto it = token_index_.find(std::string(token));
  if (it == token_index_.end()) return unseen_log_likelihood_.at(c);
  return token_log_likelihoods_[it->second * labels_.size() + c];
}

std::vector<double> BowModel::JointLogScores(std::string_view text) const {
  const size_t n_class = labels_.size();
  std::vector<double> scores = log_priors_;
  for (const auto& tok : Tokenize(text)) {
    const auto it = token_index_.find(tok);
    for (size_t c = 0; c < n_class; ++c) {
      scores[c] += it == token_index_.end()
                       ? unseen_log_likelihood_[c]
                       : token_log_likelihoods_[it->second * n_class + c];
    }
  }
  return scores;
}

std::vector<double> BowModel::Posterior(std::string_view text) const {
  std::vector<double> scores = JointLogScores(text);
  const double top = *std::max_element(scores.begin(), scores.end());
  double norm = 0.0;
  for (double& s : scores) {
    s = std::exp(s - top);
    norm += s;
  }
  for (double& s : scores) s /= norm;
  return scores;
}

const std::string& BowModel::Predict(std::string_view text) const {
  const std::vector<double> scores = JointLogScores(text);
  size_t best = 0;
  for (size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return labels_[best];
}

std::vector<std::string> BowModel::Vocabulary() const {
  std::vector<std::string> vocab;
  vocab.reserve(token_index_.size());
  for (const auto& [tok, idx] : token_index_) vocab.push_back(tok);
  std::sort(vocab.begin(), vocab.end());
  return vocab;
}

double Accuracy(const BowModel& model, const Corpus& test) {
  if (test.empty()) throw Error("accuracy on an empty test set");
  size_t correct = 0;
  for (const auto& ex : test) {
    if (model.Predict(ex.text) == ex.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.size());
}

}  // namespace aeda
