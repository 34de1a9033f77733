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

#include "veilbreak/spam_nb.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "veilbreak/error.h"
#include "veilbreak/textnorm.h"

namespace veilbreak {
namespace {

bool IsCountable(const Token& t) {
  return t.kind != TokenKind::kPunctuation;
}

std::vector<std::string> OrderClasses(std::set<std::string> labels) {
  std::vector<std::string> out;
  if (labels.erase(std::string(kSpamLabel)) > 0) {
    out.emplace_back(kSpamLabel);
  }
  out.insert(out.end(), labels.begin(), labels.end());
  return out;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

double ParseDouble(std::string_view field, std::size_t lineno) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() ||
      ptr != field.data() + field.size()) {
    throw ParseError("bad number '" + std::string(field) + "'", lineno);
  }
  return value;
}

}  // namespace

NaiveBayesModel::NaiveBayesModel(std::vector<std::string> classes,
                                 std::vector<double> log_prior,
                                 std::vector<std::string> features,
                                 std::vector<std::vector<double>> log_likelihood)
    : classes_(std::move(classes)),
      log_prior_(std::move(log_prior)),
      features_(std::move(features)),
      log_likelihood_(std::move(log_likelihood)) {
  if (classes_.size() != log_prior_.size() ||
      classes_.size() != log_likelihood_.size()) {
    throw DataError("class, prior and likelihood counts disagree");
  }
  for (const auto& row : log_likelihood_) {
    if (row.size() != features_.size()) {
      throw DataError("likelihood row length differs from feature count");
    }
  }
  for (std::size_t k = 0; k < features_.size(); ++k) {
    if (!feature_index_.emplace(features_[k], k).second) {
      throw DataError("duplicate feature '" + features_[k] + "'");
    }
  }
}

std::size_t NaiveBayesModel::ClassIndex(std::string_view label) const {
  auto it = std::find(classes_.begin(), classes_.end(), label);
  return it == classes_.end() ? npos
                              : static_cast<std::size_t>(it - classes_.begin());
}

std::size_t NaiveBayesModel::FeatureIndex(std::string_view word) const {
  auto it = feature_index_.find(std::string(word));
  return it == feature_index_.end() ? npos : it->second;
}

std::vector<std::size_t> Featurize(std::span<const std::string> features,
                                   std::string_view doc) {
  std::unordered_map<std::string_view, std::size_t> slot;
  for (std::size_t k = 0; k < features.size(); ++k) slot.emplace(features[k], k);
  std::vector<std::size_t> counts(features.size(), 0);
  for (const Token& t : TokenizeFlat(doc)) {
    if (!IsCountable(t)) continue;
    auto it = slot.find(t.lower);
    if (it != slot.end()) ++counts[it->second];
  }
  return counts;
}

NaiveBayesModel TrainNaiveBayes(std::span<const Document> corpus,
                                std::size_t max_features) {
  std::set<std::string> labels;
  for (const Document& d : corpus) labels.insert(d.label);
  if (labels.size() < 2) {
    throw DataError("Naive Bayes training needs documents from >= 2 classes");
  }
  std::vector<std::string> classes = OrderClasses(labels);

  std::map<std::string, std::size_t> total;
  std::vector<std::map<std::string, std::size_t>> per_class(classes.size());
  std::vector<std::size_t> docs_per_class(classes.size(), 0);
  for (const Document& d : corpus) {
    const auto cls = static_cast<std::size_t>(
        std::find(classes.begin(), classes.end(), d.label) - classes.begin());
    ++docs_per_class[cls];
    for (const Token& t : TokenizeFlat(d.text)) {
      if (!IsCountable(t)) continue;
      ++total[t.lower];
      ++per_class[cls][t.lower];
    }
  }

  std::vector<std::pair<std::string, std::size_t>> ranked(total.begin(),
                                                          total.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  if (ranked.size() > max_features) ranked.resize(max_features);
  std::vector<std::string> features;
  features.reserve(ranked.size());
  for (auto& r : ranked) features.push_back(r.first);

  const double n_docs = static_cast<double>(corpus.size());
  const double k = static_cast<double>(features.size());
  std::vector<double> log_prior;
  std::vector<std::vector<double>> log_likelihood;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    log_prior.push_back(std::log(docs_per_class[c] / n_docs));
    std::vector<double> counts;
    double sum = 0.0;
    for (const std::string& f : features) {
      auto it = per_class[c].find(f);
      const double n = it == per_class[c].end() ? 0.0 : it->second;
      counts.push_back(n);
      sum += n;
    }
    std::vector<double> row;
    row.reserve(features.size());
    for (double n : counts) row.push_back(std::log((n + 1.0) / (sum + k)));
    log_likelihood.push_back(std::move(row));
  }
  return NaiveBayesModel(std::move(classes), std::move(log_prior),
                         std::move(features), std::move(log_likelihood));
}

Prediction Predict(const NaiveBayesModel& model, std::string_view doc) {
  const auto counts = Featurize(model.features(), doc);
  Prediction p;
  const auto classes = model.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    double score = model.log_prior(c);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] != 0) score += counts[k] * model.log_likelihood(c, k);
    }
    p.log_scores.push_back(score);
  }
  const double best =
      *std::max_element(p.log_scores.begin(), p.log_scores.end());
  std::size_t chosen = NaiveBayesModel::npos;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (p.log_scores[c] != best) continue;
    if (chosen == NaiveBayesModel::npos || classes[c] == kHamLabel) chosen = c;
  }
  p.label = classes[chosen];
  return p;
}

EvaluationReport ScorePredictions(std::span<const std::string> gold,
                                  std::span<const std::string> predicted) {
  if (gold.empty()) throw DataError("cannot evaluate an empty corpus");
  if (gold.size() != predicted.size()) {
    throw DataError("gold and predicted label counts differ");
  }
  std::set<std::string> labels(gold.begin(), gold.end());
  labels.insert(predicted.begin(), predicted.end());

  EvaluationReport r;
  r.documents = gold.size();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == predicted[i]) ++correct;
  }
  r.accuracy = static_cast<double>(correct) / gold.size();
  for (const std::string& label : labels) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      const bool g = gold[i] == label;
      const bool p = predicted[i] == label;
      if (g && p) ++tp;
      if (!g && p) ++fp;
      if (g && !p) ++fn;
    }
    ClassMetrics m;
    m.label = label;
    m.support = tp + fn;
    m.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
    m.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
    m.f1 = m.precision + m.recall == 0.0
               ? 0.0
               : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    r.macro_precision += m.precision;
    r.macro_recall += m.recall;
    r.macro_f1 += m.f1;
    r.per_class.push_back(std::move(m));
  }
  const double n = static_cast<double>(r.per_class.size());
  r.macro_precision /= n;
  r.macro_recall /= n;
  r.macro_f1 /= n;
  return r;
}

EvaluationReport Evaluate(const NaiveBayesModel& model,
                          std::span<const Document> corpus) {
  std::vector<std::string> gold, predicted;
  for (const Document& d : corpus) {
    gold.push_back(d.label);
    predicted.push_back(Predict(model, d.text).label);
  }
  return ScorePredictions(gold, predicted);
}

void WriteModel(const NaiveBayesModel& model, std::ostream& out) {
  // max_digits10 keeps doubles bit-exact through text.
  const auto old_precision = out.precision(17);
  out << "nbmodel v1 K=" << model.feature_count() << '\n';
  const auto classes = model.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "prior\t" << classes[c] << '\t' << model.log_prior(c) << '\n';
  }
  const auto features = model.features();
  for (std::size_t k = 0; k < features.size(); ++k) {
    out << features[k];
    for (std::size_t c = 0; c < classes.size(); ++c) {
      out << '\t' << model.log_likelihood(c, k);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

void SaveModel(const NaiveBayesModel& model,
               const std::filesystem::path& path) {
  WriteFileAtomically(path, [&](std::ostream& out) { WriteModel(model, out); });
}

NaiveBayesModel ParseModel(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("nbmodel v1 K=", 0) != 0) {
    throw ParseError("expected 'nbmodel v1 K=<int>' header", 1);
  }
  std::size_t k = 0;
  {
    std::string_view num(line);
    num.remove_prefix(std::string_view("nbmodel v1 K=").size());
    if (!num.empty() && num.back() == '\r') num.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
      throw ParseError("bad feature count in header", 1);
    }
  }
  std::vector<std::string> classes;
  std::vector<double> priors;
  std::vector<std::string> features;
  std::vector<std::vector<double>> likelihood;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = SplitTabs(line);
    if (features.empty() && fields.size() == 3 && fields[0] == "prior") {
      classes.emplace_back(fields[1]);
      priors.push_back(ParseDouble(fields[2], lineno));
      likelihood.emplace_back();
      continue;
    }
    if (classes.size() < 2) throw ParseError("expected >= 2 prior lines", lineno);
    if (fields.size() != classes.size() + 1) {
      throw ParseError("feature row must have one value per class", lineno);
    }
    features.emplace_back(fields[0]);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      likelihood[c].push_back(ParseDouble(fields[c + 1], lineno));
    }
  }
  if (in.bad()) throw IoError("read failure while loading model");
  if (classes.size() < 2) throw ParseError("expected >= 2 prior lines", lineno);
  if (features.size() != k) {
    throw ParseError("header says K=" + std::to_string(k) + " but found " +
                         std::to_string(features.size()) + " features",
                     lineno);
  }
  return NaiveBayesModel(std::move(classes), std::move(priors),
                         std::move(features), std::move(likelihood));
}

NaiveBayesModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path.string());
  return ParseModel(in);
}

}  // namespace veilbreak
