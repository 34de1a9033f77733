// Copyright 2026 The Veilbreak Authors
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

#ifndef VEILBREAK_SPAM_NB_H_
#define VEILBREAK_SPAM_NB_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "veilbreak/corpus.h"

namespace veilbreak {

inline constexpr std::size_t kDefaultFeatureCount = 2500;
inline constexpr std::string_view kSpamLabel = "spam";
inline constexpr std::string_view kHamLabel = "ham";

// Multinomial Naive Bayes over the top-K most frequent training words, with
// add-one smoothing. Words outside the feature set are ignored at prediction
// time. Any label set works; "spam" is ordered first when present.
class NaiveBayesModel {
 public:
  NaiveBayesModel() = default;
  NaiveBayesModel(std::vector<std::string> classes,
                  std::vector<double> log_prior,
                  std::vector<std::string> features,
                  std::vector<std::vector<double>> log_likelihood);

  std::span<const std::string> classes() const { return classes_; }
  std::span<const std::string> features() const { return features_; }
  std::size_t feature_count() const { return features_.size(); }

  double log_prior(std::size_t cls) const { return log_prior_[cls]; }
  // log P(features()[k] | classes()[cls])
  double log_likelihood(std::size_t cls, std::size_t k) const {
    return log_likelihood_[cls][k];
  }

  // Index of the class or feature, or npos.
  std::size_t ClassIndex(std::string_view label) const;
  std::size_t FeatureIndex(std::string_view word) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::string> classes_;
  std::vector<double> log_prior_;
  std::vector<std::string> features_;
  std::unordered_map<std::string, std::size_t> feature_index_;
  std::vector<std::vector<double>> log_likelihood_;
};

// Occurrence counts of each feature word in the tokenized, lowercased doc.
std::vector<std::size_t> Featurize(std::span<const std::string> features,
                                   std::string_view doc);

// Throws DataError when fewer than two classes are present.
NaiveBayesModel TrainNaiveBayes(std::span<const Document> corpus,
                                std::size_t max_features = kDefaultFeatureCount);

struct Prediction {
  std::string label;
  // Parallel to model.classes().
  std::vector<double> log_scores;
};

// Argmax of log prior + sum count * log likelihood. Ties go to "ham" when it
// is among the tied classes, otherwise to the first tied class.
Prediction Predict(const NaiveBayesModel& model, std::string_view doc);

struct ClassMetrics {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct EvaluationReport {
  std::size_t documents = 0;
  double accuracy = 0.0;
  std::vector<ClassMetrics> per_class;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
};

// Metrics from parallel gold/predicted label lists. Classes are the union of
// both lists, sorted. Throws DataError on empty or mismatched input.
EvaluationReport ScorePredictions(std::span<const std::string> gold,
                                  std::span<const std::string> predicted);

EvaluationReport Evaluate(const NaiveBayesModel& model,
                          std::span<const Document> corpus);

// Versioned text format: `nbmodel v1 K=<int>`, `prior<TAB>label<TAB>logp`
// per class, then `word<TAB>logp_class0<TAB>logp_class1...` per feature.
void WriteModel(const NaiveBayesModel& model, std::ostream& out);
void SaveModel(const NaiveBayesModel& model, const std::filesystem::path& path);
NaiveBayesModel ParseModel(std::istream& in);
NaiveBayesModel LoadModel(const std::filesystem::path& path);

}  // namespace veilbreak

#endif  // VEILBREAK_SPAM_NB_H_
